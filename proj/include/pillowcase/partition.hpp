#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pillowcase/arith.hpp"

namespace pillowcase {

/**
 * An integer partition: weakly decreasing positive parts.  The empty
 * partition is the unique partition of 0.  Immutable by convention — all
 * operations return new values.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text); // "3,1", "" = empty

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; } // 0-based, 0 beyond

    Partition conjugate() const;
    bool contains(const Partition& inner) const; // cell-wise
    std::string to_string() const;               // "3,1"; empty partition -> ""

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

enum class PartitionFilter { all, balanced };

/** Partitions of n in reverse lexicographic order: (4),(3,1),(2,2),(2,1,1),(1^4). */
std::vector<Partition> enumerate_partitions(int n, PartitionFilter filter = PartitionFilter::all,
                                            int max_part = -1);

/** Hook length of every cell, row-major. */
std::vector<int> hook_lengths(const Partition& lambda);
Int hook_product(const Partition& lambda);

/** Number of odd parts (the o(mu) of the structural-formula sign). */
int odd_parts_count(const Partition& mu);

/** beta-set {lambda_i + L - i : i = 1..L} for a padding length L >= l(lambda), ascending. */
std::vector<int> beta_set(const Partition& lambda, int padding);

/** Inverse of beta_set: partition from a set of distinct offsets (any order). */
Partition partition_from_beta_set(std::vector<int> offsets);

/**
 * 2-core and ordered 2-quotient.  Convention (validated downstream by the
 * direct-vs-structural g cross-check): pad the beta-set to the minimal even
 * length; offsets that are odd encode alpha via s -> (s-1)/2, even offsets
 * encode beta via s -> s/2.  This assignment is stable under padding by +2.
 */
struct TwoQuotient {
    Partition core;
    Partition alpha;
    Partition beta;
};

TwoQuotient two_core_quotient(const Partition& lambda);
Partition from_core_quotient(const TwoQuotient& q);

bool is_balanced(const Partition& lambda);

/** Independent balance criteria, for cross-checking in tests. */
bool balanced_by_sign_sum(const Partition& lambda);       // sum_i [(-1)^{l_i - i + 1} - (-1)^{-i+1}] = 0
bool balanced_by_domino_stripping(const Partition& lambda);
bool balanced_by_hook_split(const Partition& lambda);     // #even hooks == #odd hooks

/** Centralizer order z(nu) = prod n^{m_n} m_n!. */
Int centralizer_size(const Partition& nu);

} // namespace pillowcase
