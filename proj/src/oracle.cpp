#include "pillowcase/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "pillowcase/characters.hpp"
#include "pillowcase/errors.hpp"

namespace pillowcase {

namespace {

using Perm = std::vector<int>;

void enumerate_fpf(int n, Perm& current, std::vector<int>& used, std::vector<Perm>& out)
{
    int first = -1;
    for (int i = 0; i < n; ++i)
        if (!used[static_cast<std::size_t>(i)]) {
            first = i;
            break;
        }
    if (first < 0) {
        out.push_back(current);
        return;
    }
    used[static_cast<std::size_t>(first)] = 1;
    for (int j = first + 1; j < n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        used[static_cast<std::size_t>(j)] = 1;
        current[static_cast<std::size_t>(first)] = j;
        current[static_cast<std::size_t>(j)] = first;
        enumerate_fpf(n, current, used, out);
        used[static_cast<std::size_t>(j)] = 0;
    }
    used[static_cast<std::size_t>(first)] = 0;
}

std::vector<Perm> fpf_involutions(int n)
{
    std::vector<Perm> out;
    Perm current(static_cast<std::size_t>(n), -1);
    std::vector<int> used(static_cast<std::size_t>(n), 0);
    enumerate_fpf(n, current, used, out);
    return out;
}

bool is_fpf_involution(const Perm& p)
{
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        int j = p[static_cast<std::size_t>(i)];
        if (j == i || p[static_cast<std::size_t>(j)] != i) return false;
    }
    return true;
}

bool transitive(const std::vector<const Perm*>& gens, int n)
{
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const Perm* g : gens) {
            int y = (*g)[static_cast<std::size_t>(x)];
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == n;
}

} // namespace

TupleCensus census(long d, const Partition& nu, long bound)
{
    if (d < 1) throw usage_error("census: d must be positive");
    const long n = 2 * d;
    if (n > bound)
        throw resource_error("census: degree " + std::to_string(n) + " above bound " +
                             std::to_string(bound));
    const long rest = n - nu.size();
    if (rest < 0 || rest % 2)
        throw usage_error("census: type (" + nu.to_string() + ",2,...) does not fit degree " +
                          std::to_string(n));

    // canonical g1 of cycle type (nu, 2, ..., 2), on consecutive points
    Perm g1(static_cast<std::size_t>(n));
    int next = 0;
    std::vector<int> type = nu.parts();
    for (long i = 0; i < rest / 2; ++i) type.push_back(2);
    for (int len : type) {
        for (int i = 0; i < len; ++i)
            g1[static_cast<std::size_t>(next + i)] = next + (i + 1) % len;
        next += len;
    }

    std::sort(type.begin(), type.end(), std::greater<int>());
    Int class_size = factorial(static_cast<unsigned long>(n)) /
                     centralizer_size(Partition{std::move(type)});

    std::vector<Perm> fpf = fpf_involutions(static_cast<int>(n));
    Int raw(0), trans(0);
    Perm h(static_cast<std::size_t>(n));
    for (const Perm& g2 : fpf) {
        for (const Perm& g3 : fpf) {
            // h = g1 g2 g3 (g3 applied first); g4 = h^{-1}
            for (int x = 0; x < n; ++x)
                h[static_cast<std::size_t>(x)] =
                    g1[static_cast<std::size_t>(g2[static_cast<std::size_t>(
                        g3[static_cast<std::size_t>(x)])])];
            if (!is_fpf_involution(h)) continue;
            raw += 1;
            if (transitive({&g1, &g2, &g3, &h}, static_cast<int>(n))) trans += 1;
        }
    }
    TupleCensus out;
    out.degree = n;
    out.nu = nu;
    out.raw_count = raw * class_size;
    out.transitive_count = trans * class_size;
    out.normalized = Rational(out.raw_count) / Rational(factorial(static_cast<unsigned long>(n)));
    return out;
}

std::pair<Rational, Rational> burnside_check(long d, const Partition& nu, long bound)
{
    TupleCensus c = census(d, nu, bound);
    const long n = 2 * d;
    Rational character_side(0);
    for (const Partition& lambda : enumerate_partitions(static_cast<int>(n),
                                                        PartitionFilter::balanced)) {
        Rational dim_ratio = Rational(dimension(lambda)) /
                             Rational(factorial(static_cast<unsigned long>(n)));
        Rational f_nu = central_character(nu, lambda);
        Rational f_inv = central_character(Partition(), lambda);
        character_side += dim_ratio * dim_ratio * f_nu * f_inv * f_inv * f_inv;
    }
    return {c.normalized, character_side};
}

std::string census_csv(const std::vector<TupleCensus>& rows)
{
    std::ostringstream out;
    out << "d,nu,raw,transitive,normalized\n";
    for (const TupleCensus& row : rows)
        out << row.degree / 2 << ",\"" << row.nu.to_string() << "\"," << to_string(row.raw_count)
            << "," << to_string(row.transitive_count) << "," << to_string(row.normalized) << "\n";
    return out.str();
}

} // namespace pillowcase
