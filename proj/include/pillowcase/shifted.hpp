#pragma once

#include <utility>

#include "pillowcase/arith.hpp"
#include "pillowcase/partition.hpp"

namespace pillowcase {

/**
 * Shifted power function
 *   p_k(lambda) = (1 - 2^{-k}) zeta(-k) + sum_i [(lambda_i - i + 1/2)^k - (-i + 1/2)^k].
 * The sum truncates at l(lambda).  p_1(lambda) = |lambda| - 1/24.
 */
Rational shifted_power(unsigned k, const Partition& lambda);

/** p_mu = prod_k p_{mu_k}. */
Rational shifted_power_product(const Partition& mu, const Partition& lambda);

/**
 * Shifted Schur function s*_mu(lambda): ratio of falling-factorial
 * determinants at y_i = lambda_i + n - i, n = max(l(lambda), l(mu)) + 1.
 * Stable under zero-padding; vanishes whenever mu is not contained in lambda.
 */
Rational shifted_schur(const Partition& mu, const Partition& lambda);

/** Same evaluation at an explicit padding length (for stability tests). */
Rational shifted_schur_padded(const Partition& mu, const Partition& lambda, int n);

/**
 * dim(lambda/mu)/dim lambda = s*_mu(lambda) / (n (n-1) ... (n-k+1)),
 * n = |lambda|, k = |mu|.  The falling-factorial normalization is the one the
 * brute-force tableau oracle confirms; the factorial-ratio variant that also
 * appears in the text is recorded as an erratum in the README.
 */
Rational oo_dim_ratio(const Partition& lambda, const Partition& mu);

/** v(eta) = (dim eta / (|eta|-2)!) (s*_{(2)}(eta) - s*_{(1,1)}(eta)) / |eta|!. */
Rational v_function(const Partition& eta);

/**
 * Both sides of chi^eta(2,1,...,1) = dim eta (s*_{(2)} - s*_{(1,1)}) / (n(n-1)),
 * n = |eta|: first = MN evaluation, second = shifted-Schur formula.  The
 * falling-factorial normalization is the MN-confirmed one (the factorial-ratio
 * variant only agrees at n = 4); see the README erratum note.
 */
std::pair<Int, Int> chi_two_one_identity(const Partition& eta);

} // namespace pillowcase
