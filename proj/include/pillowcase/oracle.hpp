#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pillowcase/arith.hpp"
#include "pillowcase/partition.hpp"

namespace pillowcase {

/**
 * Census of quadruples (g1,g2,g3,g4) in S_{2d} with g1 of cycle type
 * (nu,2,...,2), g2,g3,g4 fixed-point-free involutions and g1 g2 g3 g4 = id.
 * g1 is pinned to a canonical representative and the count scaled by its
 * class size; (g2,g3) run over the involution class, g4 is solved for.
 */
struct TupleCensus {
    long degree = 0;        // 2d
    Partition nu;
    Int raw_count;          // all quadruples
    Int transitive_count;   // quadruples generating a transitive subgroup
    Rational normalized;    // raw_count / (2d)!
};

TupleCensus census(long d, const Partition& nu, long bound = 8);

/**
 * (normalized census, character sum): the character side is
 * sum over balanced |lambda| = 2d of (dim/|lambda|!)^2 f_{(nu,2,..)} f_{(2,..)}^3
 * with f the central characters.  The two agree exactly.
 */
std::pair<Rational, Rational> burnside_check(long d, const Partition& nu, long bound = 8);

/** CSV rows "d,nu,raw,transitive,normalized". */
std::string census_csv(const std::vector<TupleCensus>& rows);

} // namespace pillowcase
