#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "pillowcase/errors.hpp"
#include "pillowcase/qseries.hpp"

using namespace pillowcase;

namespace {

QSeries geometric(long truncation)
{
    // 1/(1-q)
    QSeries s(truncation);
    for (long k = 0; k <= truncation; ++k) s.set_coefficient(k, 1);
    return s;
}

QSeries one_minus_q(long truncation)
{
    QSeries s(truncation, 1);
    s.set_coefficient(1, -1);
    return s;
}

} // namespace

TEST_SUITE_BEGIN("qseries");

TEST_CASE("ring operations")
{
    const long n = 40;
    QSeries a = geometric(n);
    QSeries b = one_minus_q(n);
    QSeries one(n, 1);

    CHECK(a * b == one);
    CHECK(b * a == one);
    CHECK(a + b - b == a);
    CHECK((a + b) * a == a * a + b * a);

    QSeries scaled = a;
    scaled *= Rational(3, 2);
    CHECK(scaled.coefficient(7) == Rational(3, 2));

    CHECK(a.truncation() == n);
    CHECK_THROWS_AS(a.coefficient(n + 1), usage_error);
    CHECK_THROWS_AS(QSeries(-1), usage_error);

    // product truncates to the shorter factor
    CHECK((geometric(10) * one_minus_q(40)).truncation() == 10);
}

TEST_CASE("inverse and rational powers")
{
    const long n = 40;
    QSeries b = one_minus_q(n);
    CHECK(b.invert() == geometric(n));
    CHECK(b * b.invert() == QSeries(n, 1));

    // (1-q)^{-1/2} = 1 + q/2 + 3q^2/8 + 5q^3/16 + 35q^4/128 + ...
    QSeries r = b.pow_rational(Rational(-1, 2));
    CHECK(r.coefficient(0) == 1);
    CHECK(r.coefficient(1) == Rational(1, 2));
    CHECK(r.coefficient(2) == Rational(3, 8));
    CHECK(r.coefficient(3) == Rational(5, 16));
    CHECK(r.coefficient(4) == Rational(35, 128));
    CHECK(r * r == b.invert());

    // square root squares back
    QSeries g = geometric(n);
    QSeries h = g.pow_rational(Rational(1, 2));
    CHECK(h * h == g);

    // integer powers allow any nonzero constant term
    QSeries c(n, 2);
    c.set_coefficient(3, Rational(-1, 5));
    CHECK(c.pow_rational(3) == c * c * c);
    CHECK(c.pow_rational(-2) * c * c == QSeries(n, 1));
    CHECK(c.pow_rational(0) == QSeries(n, 1));

    CHECK_THROWS_AS(c.pow_rational(Rational(1, 2)), usage_error); // fractional needs constant 1
    CHECK_THROWS_AS(QSeries(5).invert(), usage_error);            // zero constant term
}

TEST_CASE("eisenstein series")
{
    QSeries e2 = eisenstein(1, 1, 6);
    CHECK(e2.coefficient(0) == Rational(-1, 24));
    CHECK(e2.coefficient(1) == 1);
    CHECK(e2.coefficient(2) == 3);
    CHECK(e2.coefficient(3) == 4);
    CHECK(e2.coefficient(4) == 7);
    CHECK(e2.coefficient(5) == 6);
    CHECK(e2.coefficient(6) == 12);

    QSeries e4 = eisenstein(2, 1, 5);
    CHECK(e4.coefficient(0) == Rational(1, 240));
    CHECK(e4.coefficient(1) == 1);
    CHECK(e4.coefficient(2) == 9);
    CHECK(e4.coefficient(3) == 28);
    CHECK(e4.coefficient(4) == 73);
    CHECK(e4.coefficient(5) == 126);

    // scaled argument: q -> q^2
    QSeries e2s = eisenstein(1, 2, 12);
    for (long k = 1; k <= 11; k += 2) CHECK(e2s.coefficient(k) == 0);
    for (long k = 0; k <= 6; ++k) CHECK(e2s.coefficient(2 * k) == e2.coefficient(k));

    CHECK_THROWS_AS(eisenstein(3, 1, 10), usage_error);
    CHECK_THROWS_AS(eisenstein(1, 0, 10), usage_error);
}

TEST_CASE("even euler product")
{
    const long n = 40;
    QSeries euler = euler_product_even(n);

    // direct finite product of (1 - q^{2i})
    QSeries direct(n, 1);
    for (long i = 1; 2 * i <= n; ++i) {
        QSeries factor(n, 1);
        factor.set_coefficient(2 * i, -1);
        direct *= factor;
    }
    CHECK(euler == direct);

    // pentagonal sparsity in q^2
    CHECK(euler.coefficient(0) == 1);
    CHECK(euler.coefficient(2) == -1);
    CHECK(euler.coefficient(4) == -1);
    CHECK(euler.coefficient(6) == 0);
    CHECK(euler.coefficient(10) == 1);
    CHECK(euler.coefficient(14) == 1);
    CHECK(euler.coefficient(24) == -1);

    // the weight partition function is its inverse square root
    QSeries z = euler.pow_rational(Rational(-1, 2));
    CHECK(z * z * euler == QSeries(n, 1));
}

TEST_CASE("basis enumeration and pivot counts")
{
    // Non-constant monomial counts by depth.  A product E2(q^2)^a E2(q^4)^b
    // E4(q^4)^c is kept when a+b+2c <= depth (weight at most 2*depth).
    const std::size_t counts[] = {0, 2, 6, 12, 21, 33};
    for (int depth = 1; depth <= 5; ++depth) {
        QuasimodularBasis basis = build_basis(depth, 80);
        CHECK(basis.products.size() == counts[depth] + 1);
        CHECK(basis.products[0].length() == 0);
        long previous_sum = 0;
        for (const Partition& p : basis.products) {
            int threes = 0;
            for (int part : p.parts()) {
                CHECK(part <= 3);
                if (part == 3) ++threes;
            }
            CHECK(p.length() + threes <= depth);
            CHECK(p.size() >= previous_sum); // ordered by label sum
            previous_sum = p.size();
        }
        CHECK(basis.series.size() == basis.products.size());
        // all products independent at this truncation
        CHECK(basis.pivots.size() == counts[depth]);
    }

    // depth 1 keeps only the weight-2 generators: empty, E2(q^2), E2(q^4)
    QuasimodularBasis d1 = build_basis(1, 8);
    REQUIRE(d1.products.size() == 3);
    CHECK(d1.products[1].to_string() == "1");
    CHECK(d1.products[2].to_string() == "2");
    CHECK(d1.pivots.size() == 2);

    // depth 3 enumeration order: label sum first, reverse-lex within a sum
    QuasimodularBasis d3 = build_basis(3, 30);
    const char* expected[] = {"",    "1",     "2",   "1,1",   "3",     "2,1",  "1,1,1",
                              "3,1", "2,2",   "2,1,1", "3,2", "2,2,1", "2,2,2"};
    REQUIRE(d3.products.size() == 13);
    for (std::size_t i = 0; i < 13; ++i) CHECK(d3.products[i].to_string() == expected[i]);

    // brute-force cross-check of the depth-4 family
    QuasimodularBasis d4 = build_basis(4, 80);
    std::size_t found = 0;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b)
            for (int c = 0; a + b + 2 * c <= 4; ++c) {
                if (a + b + c == 0) continue;
                std::vector<int> parts;
                for (int i = 0; i < c; ++i) parts.push_back(3);
                for (int i = 0; i < b; ++i) parts.push_back(2);
                for (int i = 0; i < a; ++i) parts.push_back(1);
                Partition p(parts);
                CHECK(std::find(d4.products.begin(), d4.products.end(), p) != d4.products.end());
                ++found;
            }
    CHECK(found + 1 == d4.products.size());

    CHECK_THROWS_AS(build_basis(-1, 10), usage_error);
    CHECK_THROWS_AS(build_basis(1, 1), usage_error);
}

TEST_CASE("quasimodular fit recovers exact combinations")
{
    QuasimodularBasis basis = build_basis(2, 60);
    REQUIRE(basis.pivots.size() == 6);

    // an exact combination: 3 E2(q^2) E2(q^4) - 2 + 5 E4(q^4)
    QSeries target(60, Rational(-2));
    {
        QSeries cross = eisenstein(1, 2, 60) * eisenstein(1, 4, 60);
        cross *= Rational(3);
        target += cross;
        QSeries e4 = eisenstein(2, 4, 60);
        e4 *= Rational(5);
        target += e4;
    }
    QuasimodularFit fit = fit_quasimodular(basis, target);
    CHECK(fit.held_out == 24); // 30 even rows, 6 pivots
    REQUIRE(fit.combination.size() == 3);
    CHECK(fit.combination.at(Partition()) == -2);
    CHECK(fit.combination.at(Partition{{2, 1}}) == 3);
    CHECK(fit.combination.at(Partition{{3}}) == 5);

    // constants and single generators
    QuasimodularFit one = fit_quasimodular(basis, QSeries(60, 1));
    REQUIRE(one.combination.size() == 1);
    CHECK(one.combination.at(Partition()) == 1);

    QuasimodularFit zero = fit_quasimodular(basis, QSeries(60));
    CHECK(zero.combination.empty());

    QuasimodularFit e2fit = fit_quasimodular(basis, eisenstein(1, 2, 60));
    REQUIRE(e2fit.combination.size() == 1);
    CHECK(e2fit.combination.at(Partition{{1}}) == 1);

    // weight-6 cube E2(q^4)^3 needs depth 3
    QuasimodularBasis deep = build_basis(3, 60);
    REQUIRE(deep.pivots.size() == 12);
    QuasimodularFit cube = fit_quasimodular(deep, eisenstein(1, 4, 60).pow_rational(3));
    CHECK(cube.held_out == 18);
    REQUIRE(cube.combination.size() == 1);
    CHECK(cube.combination.at(Partition{{2, 2, 2}}) == 1);

    // weight-8 squares live one level up
    QuasimodularBasis four = build_basis(4, 60);
    REQUIRE(four.pivots.size() == 21);
    QuasimodularFit e4sq = fit_quasimodular(four, eisenstein(2, 4, 60).pow_rational(2));
    CHECK(e4sq.held_out == 9);
    REQUIRE(e4sq.combination.size() == 1);
    CHECK(e4sq.combination.at(Partition{{3, 3}}) == 1);
}

TEST_CASE("quasimodular fit rejects non-members")
{
    QuasimodularBasis basis = build_basis(1, 20);

    // odd coefficients are structurally excluded
    QSeries odd(20);
    odd.set_coefficient(3, 1);
    CHECK_THROWS_AS(fit_quasimodular(basis, odd), consistency_error);

    // E4(q^2) is independent of {1, E2(q^2), E2(q^4)}
    CHECK_THROWS_AS(fit_quasimodular(basis, eisenstein(2, 2, 20)), consistency_error);

    // a weight-8 product is out of span at depth 3: the held-out rows expose it
    QuasimodularBasis deep = build_basis(3, 60);
    CHECK_THROWS_AS(fit_quasimodular(deep, eisenstein(2, 4, 60).pow_rational(2)),
                    consistency_error);
    try {
        fit_quasimodular(deep, eisenstein(2, 4, 60).pow_rational(2));
    } catch (const consistency_error& e) {
        CHECK(std::string(e.what()).find("not in the span") != std::string::npos);
    }

    // series shorter than the basis rows
    CHECK_THROWS_AS(fit_quasimodular(basis, QSeries(10, 1)), usage_error);
}

TEST_CASE("asymptotic polynomial algebra and printing")
{
    AsymptoticPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.to_text() == "0");

    AsymptoticPoly p = AsymptoticPoly::term(Rational(1, 24), 2, 1);
    p.add_term(Rational(1, 4), 1, 0);
    CHECK(p.to_text() == "1/24 pi^2 H^2 + 1/4 H");
    CHECK(p.coefficient(2, 1) == Rational(1, 24));
    CHECK(p.coefficient(1, 0) == Rational(1, 4));
    CHECK(p.coefficient(5, 0) == 0);
    CHECK(p.max_h_power() == 2);

    // leading minus, higher pi powers, constant term
    AsymptoticPoly q = AsymptoticPoly::term(Rational(-3, 16), 2, 0);
    q.add_term(Rational(7, 960), 4, 2);
    q.add_term(Rational(5), 0, 0);
    CHECK(q.to_text() == "7/960 pi^4 H^4 - 3/16 H^2 + 5");

    // cancellation erases the term
    AsymptoticPoly r = p;
    r.add_term(Rational(-1, 24), 2, 1);
    CHECK(r.to_text() == "1/4 H");
    CHECK((p - p).is_zero());

    // products add H and pi powers
    AsymptoticPoly h1 = AsymptoticPoly::term(Rational(2), 1, 0);
    AsymptoticPoly h2 = AsymptoticPoly::term(Rational(3), 1, 1);
    CHECK((h1 * h2).to_text() == "6 pi^2 H^2");
    CHECK((h1 * h2).coefficient(2, 1) == 6);

    AsymptoticPoly s = p;
    s *= Rational(0);
    CHECK(s.is_zero());

    CHECK(p.to_json() ==
          "{\"terms\":[{\"h_power\":2,\"pi2_power\":1,\"coeff\":\"1/24\"},"
          "{\"h_power\":1,\"pi2_power\":0,\"coeff\":\"1/4\"}]}");

    // numeric collapse of pi powers
    const double pi = 3.14159265358979323846;
    CHECK(p.h_coefficient_numeric(2) == doctest::Approx(pi * pi / 24.0).epsilon(1e-12));
    CHECK(p.h_coefficient_numeric(1) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("substitution tables")
{
    SubstitutionTable table = default_substitution_table();
    REQUIRE(table.size() == 3);
    CHECK(table.at(1).coefficient(2, 1) == Rational(1, 24));
    CHECK(table.at(1).coefficient(1, 0) == Rational(1, 4));
    CHECK(table.at(2).coefficient(2, 1) == Rational(1, 96));
    CHECK(table.at(2).coefficient(1, 0) == Rational(1, 8));
    CHECK(table.at(3).coefficient(4, 2) == Rational(1, 3840));
    CHECK(table.at(3).terms().size() == 1);

    // file round-trip
    std::string path = "subst_roundtrip.tmp";
    {
        std::ofstream out(path);
        out << "# generator h_power pi2_power coefficient\n";
        out << "1 2 1 1/24\n1 1 0 1/4\n\n2 2 1 1/96\n2 1 0 1/8\n3 4 2 1/3840\n";
    }
    SubstitutionTable loaded = load_substitution_table(path);
    CHECK(loaded == table);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_substitution_table("no_such_table.txt"), io_error);
    {
        std::ofstream out(path);
        out << "1 2 nonsense 1/24\n";
    }
    CHECK_THROWS_AS(load_substitution_table(path), io_error);
    std::remove(path.c_str());
}

TEST_CASE("asymptotic substitution into a fit")
{
    SubstitutionTable table = default_substitution_table();

    QuasimodularFit constant;
    constant.combination[Partition()] = Rational(7, 3);
    CHECK(asymptotic_value(constant, table).to_text() == "7/3");

    QuasimodularFit single;
    single.combination[Partition{{1}}] = 1;
    CHECK(asymptotic_value(single, table) == table.at(1));

    QuasimodularFit square;
    square.combination[Partition{{1, 1}}] = 1;
    CHECK(asymptotic_value(square, table) == table.at(1) * table.at(1));

    QuasimodularFit mixed;
    mixed.combination[Partition{{3, 1}}] = Rational(-2);
    mixed.combination[Partition()] = Rational(1, 2);
    AsymptoticPoly expected = table.at(3) * table.at(1) * Rational(-2);
    expected.add_term(Rational(1, 2), 0, 0);
    CHECK(asymptotic_value(mixed, table) == expected);

    // the known mean: fitting the weighted first moment gives E2(q^2)
    QuasimodularFit mean;
    mean.combination[Partition{{1}}] = 1;
    CHECK(asymptotic_value(mean, table).to_text() == "1/24 pi^2 H^2 + 1/4 H");
}

TEST_CASE("numeric validation of the substitution table")
{
    // The deepest grid point is h = 0.16/2^7; the q^4-series needs terms out to
    // n ~ 10^4 before its tail drops below the 1e-6 gate there.
    std::vector<double> grid;
    for (int i = 0; i < 8; ++i) grid.push_back(0.16 / (1 << i));
    auto report = validate_substitution_table(40000, grid, default_substitution_table());
    REQUIRE(report.size() == 4);
    for (const auto& row : report) {
        CAPTURE(row.label);
        CAPTURE(row.leading_rel_error);
        CHECK(row.pass);
        CHECK(row.leading_rel_error <= 1e-6);
    }
    // labels come out as 0 (constant), then 1..3
    CHECK(report[0].label == 0);
    CHECK(report[0].leading_power == 0);
    CHECK(report[1].label == 1);
    CHECK(report[1].leading_power == 2);
    CHECK(report[2].label == 2);
    CHECK(report[3].label == 3);
    CHECK(report[3].leading_power == 4);
}

TEST_SUITE_END();
