#pragma once

#include "pillowcase/arith.hpp"
#include "pillowcase/partition.hpp"
#include "pillowcase/qseries.hpp"

namespace pillowcase {

/**
 * Pillowcase weight w(lambda) = (dim lambda / |lambda|!)^2 f_{(2,...,2)}(lambda)^4.
 * Zero for odd size and for unbalanced lambda.
 */
Rational pillowcase_weight(const Partition& lambda);

/**
 * (product of odd hooks / product of even hooks)^2 — only stated for balanced
 * lambda; unbalanced input is rejected.
 */
Rational pillowcase_weight_hooks(const Partition& lambda);

/** Z(q) = sum_lambda w(lambda) q^{|lambda|} = prod (1 - q^{2i})^{-1/2}. */
QSeries weight_partition_function_series(long truncation);

/** Z_n * 2^{9/8} 3^{3/8} n^{7/8} e^{-pi sqrt(n/6)} -> 1 as n -> infinity. */
double meinardus_ratio(long n);

} // namespace pillowcase
