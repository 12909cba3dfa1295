#include "doctest.h"

#include <algorithm>
#include <functional>
#include <vector>

#include "pillowcase/characters.hpp"
#include "pillowcase/errors.hpp"
#include "pillowcase/partition.hpp"

using namespace pillowcase;

TEST_SUITE_BEGIN("characters");

TEST_CASE("dimension: hook formula sanity")
{
    CHECK(dimension(Partition()) == 1);
    CHECK(dimension(Partition{{1}}) == 1);
    CHECK(dimension(Partition{{3, 1}}) == 3);
    CHECK(dimension(Partition{{2, 2}}) == 2);
    CHECK(dimension(Partition{{2, 1}}) == 2);

    // sum of dim^2 over irreducibles is n!
    for (int n = 1; n <= 10; ++n) {
        Int total(0);
        for (const Partition& mu : enumerate_partitions(n)) total += dimension(mu) * dimension(mu);
        CHECK(total == factorial(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("skew dimension: determinant vs brute force")
{
    for (int n = 0; n <= 9; ++n)
        for (const Partition& outer : enumerate_partitions(n))
            for (int k = 0; k <= n; ++k)
                for (const Partition& inner : enumerate_partitions(k)) {
                    if (!outer.contains(inner)) {
                        CHECK(skew_dimension(outer, inner) == 0);
                        continue;
                    }
                    CHECK(skew_dimension(outer, inner) == skew_syt_count_bruteforce(outer, inner));
                }
}

TEST_CASE("murnaghan-nakayama basics")
{
    // identity column gives the dimension, and the sign character gives the parity
    for (int n = 1; n <= 9; ++n) {
        Partition ones(std::vector<int>(n, 1));
        Partition sign_row(std::vector<int>(n, 1));
        for (const Partition& mu : enumerate_partitions(n))
            CHECK(mn_character(mu, Partition(), ones) == dimension(mu));
        for (const Partition& nu : enumerate_partitions(n)) {
            int even_parts = 0;
            for (int part : nu.parts())
                if (part % 2 == 0) ++even_parts;
            Int expected = (even_parts % 2 == 0) ? Int(1) : Int(-1);
            CHECK(mn_character(sign_row, Partition(), nu) == expected);
        }
    }

    // a couple of fixed values from the S4 table
    CHECK(mn_character(Partition{{3, 1}}, Partition(), Partition{{2, 1, 1}}) == 1);
    CHECK(mn_character(Partition{{3, 1}}, Partition(), Partition{{2, 2}}) == -1);
    CHECK(mn_character(Partition{{2, 2}}, Partition(), Partition{{4}}) == 0);
    CHECK(mn_character(Partition{{2, 2}}, Partition(), Partition{{2, 2}}) == 2);

    // skew example: chi^{(2,2)/(1,1)} on the class (2)
    CHECK(mn_character(Partition{{2, 2}}, Partition{{1, 1}}, Partition{{2}}) == -1);
}

TEST_CASE("character table orthogonality")
{
    for (int n = 2; n <= 10; ++n) {
        CharacterTable table = character_table(n);
        int classes = static_cast<int>(table.columns.size());
        REQUIRE(classes == static_cast<int>(table.rows.size()));

        Int n_fact = factorial(static_cast<unsigned long>(n));
        std::vector<Int> class_sizes(classes);
        for (int c = 0; c < classes; ++c) class_sizes[c] = n_fact / centralizer_size(table.columns[c]);

        for (int r1 = 0; r1 < classes; ++r1)
            for (int r2 = r1; r2 < classes; ++r2) {
                Int dot(0);
                for (int c = 0; c < classes; ++c) dot += class_sizes[c] * table.at(r1, c) * table.at(r2, c);
                CHECK(dot == (r1 == r2 ? n_fact : Int(0)));
            }
        for (int c1 = 0; c1 < classes; ++c1)
            for (int c2 = c1; c2 < classes; ++c2) {
                Int dot(0);
                for (int r = 0; r < classes; ++r) dot += table.at(r, c1) * table.at(r, c2);
                CHECK(dot == (c1 == c2 ? centralizer_size(table.columns[c1]) : Int(0)));
            }
    }

    CharacterTable t4 = character_table(4);
    CHECK(t4.at(t4.row_index(Partition{{3, 1}}), t4.col_index(Partition{{2, 2}})) == -1);
    CHECK_THROWS_AS(t4.row_index(Partition{{5}}), usage_error);
    CHECK_THROWS_AS(character_table(13), resource_error);
}

TEST_CASE("involution character fast path equals MN")
{
    // straight characters, all balanced shapes through size 16
    for (int n = 0; n <= 16; n += 2) {
        Partition twos(std::vector<int>(n / 2, 2));
        for (const Partition& outer : enumerate_partitions(n))
            CHECK(involution_character(outer, Partition()) == mn_character(outer, Partition(), twos));
    }

    // skew shapes: outer size through 12, inner size through 6
    for (int n = 2; n <= 12; ++n)
        for (const Partition& outer : enumerate_partitions(n))
            for (int k = n % 2; k <= std::min(n, 6); k += 2) {
                Partition twos(std::vector<int>((n - k) / 2, 2));
                for (const Partition& inner : enumerate_partitions(k))
                    CHECK(involution_character(outer, inner) == mn_character(outer, inner, twos));
            }

    // fixed values relied on elsewhere
    CHECK(involution_character(Partition{{3, 1}}, Partition()) == -1);
    CHECK(involution_character(Partition{{2, 2}}, Partition{{1, 1}}) == -1);
    CHECK(involution_character(Partition{{2}}, Partition()) == 1);
    CHECK(involution_character(Partition{{1, 1}}, Partition()) == -1);
}

TEST_CASE("near-involution character equals MN on the padded type")
{
    const Partition rhos[] = {Partition(),        Partition{{2}},    Partition{{1, 1}},
                              Partition{{3, 1}},  Partition{{4}},    Partition{{2, 2}},
                              Partition{{2, 1, 1}}};
    for (int n = 0; n <= 10; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (const Partition& rho : rhos) {
                if (rho.size() > n) continue;
                if ((n - rho.size()) % 2) {
                    CHECK_THROWS_AS(near_involution_character(lambda, rho), usage_error);
                    continue;
                }
                std::vector<int> type_parts = rho.parts();
                type_parts.insert(type_parts.end(), (n - rho.size()) / 2, 2);
                std::sort(type_parts.begin(), type_parts.end(), std::greater<int>());
                Partition tau(type_parts);
                CHECK(near_involution_character(lambda, rho) == mn_character(lambda, Partition(), tau));
            }
}

TEST_CASE("central characters")
{
    // the empty type is the all-twos class: hand values on S2
    CHECK(central_character(Partition(), Partition()) == Rational(1));
    CHECK(central_character(Partition(), Partition{{2}}) == Rational(1));
    CHECK(central_character(Partition(), Partition{{1, 1}}) == Rational(-1));
    // |lambda| - |eta| must be even
    CHECK_THROWS_AS(central_character(Partition(), Partition{{1}}), usage_error);
    CHECK_THROWS_AS(central_character(Partition{{2}}, Partition{{1}}), usage_error);
    CHECK_THROWS_AS(central_character(Partition{{2, 2}}, Partition{{2}}), usage_error);

    // direct definition |C| chi(tau) / dim on small shapes, tau = eta + twos
    for (int n = 2; n <= 8; ++n)
        for (const Partition& lambda : enumerate_partitions(n))
            for (const Partition& eta :
                 {Partition(), Partition{{2}}, Partition{{1, 1}}, Partition{{3, 1}}}) {
                if (eta.size() > n || (n - eta.size()) % 2) continue;
                std::vector<int> type_parts = eta.parts();
                type_parts.insert(type_parts.end(), (n - eta.size()) / 2, 2);
                std::sort(type_parts.begin(), type_parts.end(), std::greater<int>());
                Partition tau(type_parts);
                Rational expected =
                    Rational(factorial(static_cast<unsigned long>(n)) * mn_character(lambda, Partition(), tau)) /
                    Rational(centralizer_size(tau) * dimension(lambda));
                CHECK(central_character(eta, lambda) == expected);
            }
}

TEST_SUITE_END();
