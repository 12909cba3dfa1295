#include "pillowcase/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "pillowcase/eigen_support.hpp"
#include "pillowcase/errors.hpp"
#include "pillowcase/linalg.hpp"

namespace pillowcase {

Int dimension(const Partition& lambda)
{
    return factorial(static_cast<unsigned long>(lambda.size())) / hook_product(lambda);
}

Int skew_dimension(const Partition& outer, const Partition& inner)
{
    if (!outer.contains(inner)) return Int(0);
    const int n = outer.size() - inner.size();
    const int L = outer.length();
    if (L == 0) return Int(1);

    // Aitken: f = n! det[ 1/(outer_i - inner_j - i + j)! ]
    RationalMatrix m(L, L);
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            int e = outer.part(i) - inner.part(j) - i + j;
            m(i, j) = e < 0 ? Rational(0)
                            : Rational(1) / Rational(factorial(static_cast<unsigned long>(e)));
        }
    }
    Rational det = rational_determinant(std::move(m)) *
                   Rational(factorial(static_cast<unsigned long>(n)));
    if (det.get_den() != 1) throw consistency_error("skew_dimension: non-integer determinant");
    return det.get_num();
}

Int skew_syt_count_bruteforce(const Partition& outer, const Partition& inner)
{
    if (!outer.contains(inner)) return Int(0);
    std::map<std::vector<int>, Int> memo;

    // rows of `current` padded to outer's length for a stable map key
    std::function<Int(std::vector<int>&)> count = [&](std::vector<int>& current) -> Int {
        if (auto it = memo.find(current); it != memo.end()) return it->second;
        bool done = true;
        Int total(0);
        for (int i = 0; i < outer.length(); ++i) {
            if (current[static_cast<std::size_t>(i)] == outer.part(i)) continue;
            done = false;
            // can we add a cell to row i?
            if (i == 0 || current[static_cast<std::size_t>(i - 1)] >
                              current[static_cast<std::size_t>(i)]) {
                current[static_cast<std::size_t>(i)] += 1;
                total += count(current);
                current[static_cast<std::size_t>(i)] -= 1;
            }
        }
        if (done) total = 1;
        memo.emplace(current, total);
        return total;
    };

    std::vector<int> start(static_cast<std::size_t>(outer.length()), 0);
    for (int i = 0; i < inner.length(); ++i) start[static_cast<std::size_t>(i)] = inner.part(i);
    return count(start);
}

namespace {

// One border-strip step on a beta-set: lower some element by r.  The sign is
// (-1)^{number of occupied slots jumped over}.
struct StripState {
    std::vector<int> set; // ascending
    std::size_t next_part;
    bool operator<(const StripState& o) const
    {
        if (next_part != o.next_part) return next_part < o.next_part;
        return set < o.set;
    }
};

Int mn_recurse(const std::vector<int>& set, std::size_t idx, const std::vector<int>& rho,
               const std::vector<int>& target, std::map<StripState, Int>& memo)
{
    if (idx == rho.size()) return set == target ? Int(1) : Int(0);

    StripState key{set, idx};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int r = rho[idx];
    Int total(0);
    for (std::size_t i = 0; i < set.size(); ++i) {
        const int s = set[i];
        const int t = s - r;
        if (t < 0) continue;
        auto lo = std::lower_bound(set.begin(), set.end(), t);
        if (lo != set.end() && *lo == t) continue; // slot occupied
        // elements strictly between t and s
        std::size_t below = static_cast<std::size_t>(lo - set.begin());
        std::size_t jumped = i - below;
        std::vector<int> next(set);
        next.erase(next.begin() + static_cast<long>(i));
        next.insert(std::lower_bound(next.begin(), next.end(), t), t);
        Int sub = mn_recurse(next, idx + 1, rho, target, memo);
        if (jumped % 2)
            total -= sub;
        else
            total += sub;
    }
    auto inserted = memo.emplace(std::move(key), std::move(total));
    return inserted.first->second;
}

} // namespace

Int mn_character(const Partition& outer, const Partition& inner, const Partition& rho)
{
    // removals reach inner's beta-set only when inner fits inside outer, so no
    // explicit containment check is needed
    if (rho.size() != outer.size() - inner.size()) return Int(0);

    const int L = std::max(outer.length(), inner.length());
    std::vector<int> start = beta_set(outer, L);
    std::vector<int> target = beta_set(inner, L);
    std::map<StripState, Int> memo;
    return mn_recurse(start, 0, rho.parts(), target, memo);
}

Int involution_character(const Partition& outer, const Partition& inner)
{
    const int n = outer.size() - inner.size();
    if (n < 0 || n % 2) return Int(0);

    TwoQuotient qo = two_core_quotient(outer);
    TwoQuotient qi = two_core_quotient(inner);
    if (qo.core != qi.core) return Int(0);
    if (!qo.alpha.contains(qi.alpha) || !qo.beta.contains(qi.beta)) return Int(0);

    const int da = qo.alpha.size() - qi.alpha.size();
    // (-1)^v where v counts vertical dominoes in a tiling of the skew shape;
    // v is the difference of the odd-part counts, halved.
    const int o = odd_parts_count(outer) - odd_parts_count(inner);
    Int value = binomial(Int(n / 2), static_cast<unsigned long>(da)) *
                skew_dimension(qo.alpha, qi.alpha) * skew_dimension(qo.beta, qi.beta);
    return ((o / 2) % 2 + 2) % 2 ? Int(-value) : value;
}

namespace {

Int near_involution_recurse(const std::vector<int>& set, std::size_t idx,
                            const std::vector<int>& rho, std::map<StripState, Int>& memo)
{
    if (idx == rho.size())
        return involution_character(partition_from_beta_set(set), Partition());

    StripState key{set, idx};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int r = rho[idx];
    Int total(0);
    for (std::size_t i = 0; i < set.size(); ++i) {
        const int s = set[i];
        const int t = s - r;
        if (t < 0) continue;
        auto lo = std::lower_bound(set.begin(), set.end(), t);
        if (lo != set.end() && *lo == t) continue;
        std::size_t below = static_cast<std::size_t>(lo - set.begin());
        std::size_t jumped = i - below;
        std::vector<int> next(set);
        next.erase(next.begin() + static_cast<long>(i));
        next.insert(std::lower_bound(next.begin(), next.end(), t), t);
        Int sub = near_involution_recurse(next, idx + 1, rho, memo);
        if (jumped % 2)
            total -= sub;
        else
            total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

Int near_involution_character(const Partition& lambda, const Partition& rho)
{
    const int rest = lambda.size() - rho.size();
    if (rest < 0 || rest % 2) throw usage_error("near_involution_character: parity mismatch");

    // strip the explicit parts (largest first), then close with the all-twos fast path
    std::vector<int> parts = rho.parts(); // already descending
    std::vector<int> start = beta_set(lambda, lambda.length());
    std::map<StripState, Int> memo;
    return near_involution_recurse(start, 0, parts, memo);
}

Rational central_character(const Partition& eta, const Partition& lambda)
{
    const int rest = lambda.size() - eta.size();
    if (rest < 0 || rest % 2) throw usage_error("central_character: parity mismatch");

    std::vector<int> type = eta.parts();
    for (int i = 0; i < rest / 2; ++i) type.push_back(2);
    std::sort(type.begin(), type.end(), std::greater<int>());
    Partition tau{std::move(type)};

    Rational class_size = Rational(factorial(static_cast<unsigned long>(lambda.size()))) /
                          Rational(centralizer_size(tau));
    return class_size * Rational(near_involution_character(lambda, eta)) /
           Rational(dimension(lambda));
}

int CharacterTable::row_index(const Partition& mu) const
{
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i] == mu) return static_cast<int>(i);
    throw usage_error("character table: unknown row " + mu.to_string());
}

int CharacterTable::col_index(const Partition& nu) const
{
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == nu) return static_cast<int>(i);
    throw usage_error("character table: unknown column " + nu.to_string());
}

CharacterTable character_table(int n, int bound)
{
    if (n < 0) throw usage_error("character_table: negative degree");
    if (n > bound)
        throw resource_error("character_table: degree " + std::to_string(n) +
                             " above bound " + std::to_string(bound));
    CharacterTable t;
    t.n = n;
    t.rows = enumerate_partitions(n);
    t.columns = t.rows;
    t.values.resize(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        t.values[i].reserve(t.columns.size());
        for (const Partition& nu : t.columns)
            t.values[i].push_back(mn_character(t.rows[i], Partition(), nu));
    }
    return t;
}

} // namespace pillowcase
