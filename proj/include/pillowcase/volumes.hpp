#pragma once

#include <map>
#include <string>
#include <vector>

#include "pillowcase/arith.hpp"
#include "pillowcase/cache.hpp"
#include "pillowcase/partition.hpp"
#include "pillowcase/qseries.hpp"

namespace pillowcase {

/**
 * g_nu(lambda) = (2^{|nu|/2} (|lambda|/2)!) / (z(nu) ((|lambda|-|nu|)/2)!)
 *                  * chi^lambda(nu,2,...,2) / chi^lambda(2,...,2).
 * Defined for balanced lambda, |nu| even, |nu| <= |lambda|.  Parts equal to 2
 * in nu are marked points: g_{(2)}(lambda) = |lambda|/2 by this prefactor, not
 * a literal ratio of identical central characters.
 */
Rational g_direct(const Partition& nu, const Partition& lambda);

/**
 * Structural form: (2^{|nu|/2}/z(nu)) sum over balanced mu of size |nu| of
 * chi^mu(nu) (-1)^{o_mu/2} s*_a(alpha) s*_b(beta), where (a,b) and
 * (alpha,beta) are the 2-quotients of mu and lambda.  Terms with a !< alpha
 * or b !< beta vanish through the shifted Schur functions.
 */
Rational g_structural(const Partition& nu, const Partition& lambda);

/** h_mu(lambda) = (-1)^{o_mu/2} s*_a(alpha) s*_b(beta) over balanced mu of size m. */
std::map<Partition, Rational> h_vector(const Partition& lambda, long m);

/**
 * Checks the character transform between V_nu := 2^{-|nu|/2} g_structural(nu, lambda)
 * and the h vector: V_nu = (1/z(nu)) sum_mu chi^mu(nu) h_mu for balanced nu of
 * size m, and the inverse h_mu = sum_nu chi^mu(nu) V_nu with nu running over
 * all partitions of m (row orthogonality needs every class; see README note on
 * the balanced-only inverse).
 */
bool character_transform_check(const Partition& lambda, long m);

/** sum over balanced mu of size |nu| of chi^mu(nu) chi^mu(2,...,2); zero unless nu is the all-twos class. */
Rational leading_term_vanishing(const Partition& nu);

/**
 * Observable: '*'-joined product of "1", "p<k>" and "g[<parts>]" tokens,
 * e.g. "p1*p1*p3" or "g[2,2]".  Canonical form sorts g factors first
 * (lexicographically by text), then p factors by ascending k.
 */
class Observable {
public:
    static Observable parse(const std::string& text);

    const std::string& canonical() const { return canonical_; }
    /** FNV-1a 64-bit hex of the canonical form; names the cache directory. */
    std::string hash() const;

    Rational evaluate(const Partition& lambda) const;
    bool is_constant_one() const { return p_factors_.empty() && g_factors_.empty(); }

    const std::vector<unsigned>& p_factors() const { return p_factors_; }
    const std::vector<Partition>& g_factors() const { return g_factors_; }

private:
    std::vector<unsigned> p_factors_;   // k of each p_k factor, ascending
    std::vector<Partition> g_factors_;  // nu of each g factor, sorted by text
    std::string canonical_;
};

struct ExpectationSeries {
    std::string observable;            // canonical form
    std::vector<Rational> coefficients; // entry m = sum over |lambda| = 2m of w(lambda) f(lambda)
};

/**
 * One block of the expectation sum: lambda runs over balanced partitions whose
 * 2-quotient (alpha, beta) has |alpha| = n1, |beta| = n2.  Cached when a cache
 * is supplied.
 */
Rational expectation_block(const Observable& f, long n1, long n2,
                           const BlockCache* cache = nullptr);

/**
 * coefficients[m] = sum_{n1+n2=m} expectation_block(f, n1, n2) for m <= M.
 * `workers` block-level threads; results independent of the worker count.
 */
ExpectationSeries expectation_series(const Observable& f, long M,
                                     const BlockCache* cache = nullptr,
                                     int workers = 1);

/** Same sweep shared across several observables (one pass over each lambda). */
std::vector<ExpectationSeries> expectation_series_multi(
    const std::vector<Observable>& fs, long M,
    const BlockCache* cache = nullptr, int workers = 1);

/**
 * End-to-end pipeline: expectation series to half-size M, multiplied by
 * prod (1-q^{2i})^{1/2} (the inverse of the weight partition function),
 * fitted over the depth-D quasimodular basis, then substituted.
 */
AsymptoticPoly analyze_expectation(const Observable& f, long M, int depth,
                                   const SubstitutionTable& table,
                                   const BlockCache* cache = nullptr,
                                   int workers = 1);

/** The fit stage of analyze_expectation, exposed for inspection. */
QuasimodularFit fit_expectation(const std::vector<Rational>& coefficients, int depth);

} // namespace pillowcase
