#pragma once

#include <vector>

#include "pillowcase/partition.hpp"

namespace pillowcase {

/**
 * Rotated profile of a Young diagram as a piecewise-linear function
 * L(x) >= |x| with slopes +-1, equal to |x| outside a compact interval.
 * Breakpoints are kept in integer (unscaled) coordinates together with an
 * integer scale s, so that L(x) = v(u)/sqrt(s) at x = u/sqrt(s); nothing is
 * floated until a numeric kernel needs it.
 */
struct Contour {
    std::vector<long> u;   // integer breakpoints, strictly increasing
    std::vector<long> v;   // values at breakpoints (L equals |u| at both ends)
    long scale = 1;

    double value(double x) const;     // scaled evaluation; |x| outside support
    double support_radius() const;    // largest |u| / sqrt(scale)
};

/** Profile of lambda in integer coordinates at the given scale (empty lambda gives |x|). */
Contour contour_at_scale(const Partition& lambda, long scale);

/**
 * Area-normalized contour: scale 2|lambda|, so that the area between L and
 * |x| is exactly 1 (each cell contributes a diamond of area 2 before scaling).
 */
Contour rescaled_contour(const Partition& lambda);

/**
 * ||f||^2 = int int ((f(s)-f(t))/(s-t))^2 ds dt for f = L_a - L_b (compactly
 * supported, piecewise linear), via the exact cell formula
 * -2 sum_{ij} g_i g_j K_ij with K the log-kernel rectangle integral.
 * Both contours must carry the same scale.
 */
double sobolev_norm_sq(const Contour& a, const Contour& b);

/** Same kernel on explicit nodes (f linear between nodes, zero outside). */
double sobolev_norm_sq_nodes(const std::vector<double>& x, const std::vector<double>& f);

/** y(x) = -(sqrt6/pi) log(1 - e^{-pi x/sqrt6}), the limit-shape curve; x > 0. */
double omega_curve(double x);

/** The same curve in rotated coordinates u = (x-y)/sqrt2, an even function >= |u|. */
double omega_rot(double u);

/** mu_k = int u^k (Omega_rot(u) - |u|) du; mu_0 = 1, odd moments 0. */
double limit_moments(int k);

/** c(x) = 1/2 sum_{k>=1} 1/(k(k+1)(2k+1) x^{2k}), truncated below 1e-15. */
double c_correction(double x);

struct HookIntegralCheck {
    double lhs; // log of the hook length
    double rhs; // the profile integral over the hook rectangle plus c(hook)
};

/** Both sides of the hook-integral identity for the cell (row, col), 1-based. */
HookIntegralCheck hook_integral_check(const Partition& lambda, int row, int col);

/**
 * w-probability that the 2-quotient halves of a size-n balanced partition
 * differ by more than eps in Sobolev norm (both quotient contours at common
 * scale n).  Exhaustive over quotient pairs; n above the bound is refused.
 */
double concentration_profile(long n, double eps, long bound = 40);

/** sup_x |w-weighted mean contour at size n - Omega_rot|. */
double mean_contour_distance(long n, long bound = 40);

struct PkTrendRow {
    long n = 0;
    double scaled = 0.0;          // <p_k>_n / n^{(k+1)/2}
    double moment_constant = 0.0;   // k * mu_{k-1}
    double rim_constant = 0.0;    // k * 2^{(k-1)/2} * mu_{k-1} (see README)
    double gap_moment = 0.0;
    double gap_rim = 0.0;
};

std::vector<PkTrendRow> p_k_trend(int k, const std::vector<long>& sizes, long bound = 40);

struct WeightEstimateRow {
    long n = 0;
    double max_ratio = 0.0;   // max over lambda of |log w + (n/2)||L_a-L_b||^2| / sqrt(n)
    bool sampled = false;
};

/**
 * Diagnostic for w(lambda) = exp(-(n/2)||L_alpha - L_beta||^2 + O(sqrt n)):
 * exhaustive up to the bound, deterministic sampling above it.
 */
std::vector<WeightEstimateRow> weight_estimate_diagnostic(const std::vector<long>& sizes,
                                                          long exhaustive_bound = 40,
                                                          std::size_t sample_count = 400);

/** CSV rows "n,eps,probability". */
std::string concentration_csv(const std::vector<long>& sizes, const std::vector<double>& epsilons,
                              long bound = 40);

/** CSV rows "x,mean_contour,omega" for the given size. */
std::string mean_curve_csv(long n, long bound = 40);

} // namespace pillowcase
