#include "pillowcase/limitshape.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "pillowcase/errors.hpp"
#include "pillowcase/shifted.hpp"
#include "pillowcase/weights.hpp"

namespace pillowcase {

namespace {

// antiderivative pair for the log kernel: phi'' = log|x|
double phi(double x)
{
    if (x == 0.0) return 0.0;
    return x * x * (2.0 * std::log(std::fabs(x)) - 3.0) / 4.0;
}

double kernel(double a, double b, double c, double d)
{
    return phi(b - c) + phi(a - d) - phi(b - d) - phi(a - c);
}

long contour_int_value(const Contour& c, long u)
{
    if (c.u.empty() || u <= c.u.front() || u >= c.u.back()) return std::labs(u);
    auto it = std::upper_bound(c.u.begin(), c.u.end(), u);
    std::size_t hi = static_cast<std::size_t>(it - c.u.begin());
    std::size_t lo = hi - 1;
    long du = c.u[hi] - c.u[lo];
    long t = u - c.u[lo];
    return c.v[lo] + (c.v[hi] - c.v[lo]) * t / du; // slopes are +-1, so exact
}

} // namespace

double Contour::value(double x) const
{
    double s = std::sqrt(static_cast<double>(scale));
    double ux = x * s;
    if (u.empty() || ux <= static_cast<double>(u.front()) || ux >= static_cast<double>(u.back()))
        return std::fabs(x);
    auto it = std::lower_bound(u.begin(), u.end(), ux,
                               [](long uu, double val) { return static_cast<double>(uu) < val; });
    std::size_t hi = static_cast<std::size_t>(it - u.begin()); // >= 1 since ux > u.front()
    std::size_t lo = hi - 1;
    double t = (ux - static_cast<double>(u[lo])) / static_cast<double>(u[hi] - u[lo]);
    return (static_cast<double>(v[lo]) * (1.0 - t) + static_cast<double>(v[hi]) * t) / s;
}

double Contour::support_radius() const
{
    if (u.empty()) return 0.0;
    long r = std::max(std::labs(u.front()), std::labs(u.back()));
    return static_cast<double>(r) / std::sqrt(static_cast<double>(scale));
}

Contour contour_at_scale(const Partition& lambda, long scale)
{
    if (scale < 1) throw usage_error("contour_at_scale: scale must be positive");
    Contour c;
    c.scale = scale;
    const int l = lambda.length();
    if (l == 0) {
        c.u = {0};
        c.v = {0};
        return c;
    }
    // descent on (x, x+1) exactly at the particle positions x = lambda_i - i
    std::vector<long> particles;
    for (int i = 1; i <= l; ++i) particles.push_back(lambda.part(i - 1) - i);
    long lo = -static_cast<long>(l);
    long hi = lambda.part(0);
    long val = -lo;
    for (long x = lo; x <= hi; ++x) {
        c.u.push_back(x);
        c.v.push_back(val);
        bool descend = std::find(particles.begin(), particles.end(), x) != particles.end();
        val += descend ? -1 : 1;
    }
    return c;
}

Contour rescaled_contour(const Partition& lambda)
{
    return contour_at_scale(lambda, std::max(2L * lambda.size(), 1L));
}

double sobolev_norm_sq(const Contour& a, const Contour& b)
{
    if (a.scale != b.scale) throw usage_error("sobolev_norm_sq: contours carry different scales");
    long lo = std::min(a.u.empty() ? 0 : a.u.front(), b.u.empty() ? 0 : b.u.front());
    long hi = std::max(a.u.empty() ? 0 : a.u.back(), b.u.empty() ? 0 : b.u.back());

    std::vector<long> pos;
    std::vector<long> slope;
    long fa = contour_int_value(a, lo) - contour_int_value(b, lo);
    for (long x = lo; x < hi; ++x) {
        long fb = contour_int_value(a, x + 1) - contour_int_value(b, x + 1);
        long g = fb - fa;
        if (g != 0) {
            pos.push_back(x);
            slope.push_back(g);
        }
        fa = fb;
    }

    double total = 0.0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        double ai = static_cast<double>(pos[i]);
        total += static_cast<double>(slope[i] * slope[i]) * kernel(ai, ai + 1, ai, ai + 1);
        for (std::size_t j = i + 1; j < pos.size(); ++j) {
            double aj = static_cast<double>(pos[j]);
            total += 2.0 * static_cast<double>(slope[i] * slope[j]) *
                     kernel(ai, ai + 1, aj, aj + 1);
        }
    }
    return -2.0 * total / static_cast<double>(a.scale);
}

double sobolev_norm_sq_nodes(const std::vector<double>& x, const std::vector<double>& f)
{
    if (x.size() != f.size() || x.size() < 2)
        throw usage_error("sobolev_norm_sq_nodes: need matching node/value lists");
    std::vector<double> g(x.size() - 1);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) g[i] = (f[i + 1] - f[i]) / (x[i + 1] - x[i]);
    double total = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0.0) continue;
        total += g[i] * g[i] * kernel(x[i], x[i + 1], x[i], x[i + 1]);
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (g[j] == 0.0) continue;
            total += 2.0 * g[i] * g[j] * kernel(x[i], x[i + 1], x[j], x[j + 1]);
        }
    }
    return -2.0 * total;
}

double omega_curve(double x)
{
    if (x <= 0.0) throw usage_error("omega_curve: x must be positive");
    static const double s6 = std::sqrt(6.0);
    return -(s6 / M_PI) * std::log1p(-std::exp(-M_PI * x / s6));
}

double omega_rot(double u)
{
    u = std::fabs(u);
    static const double s2 = std::sqrt(2.0);
    static const double xeq = std::sqrt(6.0) * std::log(2.0) / M_PI;
    // (x - y(x))/sqrt2 is increasing; bracket and bisect
    double lo = xeq, hi = s2 * u + xeq + 1.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((mid - omega_curve(mid)) / s2 < u)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-16 * (1.0 + hi)) break;
    }
    double x = 0.5 * (lo + hi);
    return (x + omega_curve(x)) / s2;
}

double limit_moments(int k)
{
    if (k < 0) throw usage_error("limit_moments: negative moment");
    if (k % 2) return 0.0;
    // composite Simpson on [0, R]; integrand decays like e^{-pi sqrt2 u / sqrt6}
    const double R = 60.0;
    const int n = 24000; // even
    const double h = R / n;
    auto f = [&](double u) { return std::pow(u, k) * (omega_rot(u) - u); };
    double sum = f(0.0) + f(R);
    for (int i = 1; i < n; ++i) sum += f(i * h) * (i % 2 ? 4.0 : 2.0);
    return 2.0 * sum * h / 3.0;
}

double c_correction(double x)
{
    if (x < 1.0) throw usage_error("c_correction: x below 1");
    double sum = 0.0;
    double xpow = 1.0;
    const double x2 = x * x;
    for (int k = 1; k <= 400; ++k) {
        xpow *= x2;
        double term = 1.0 / (static_cast<double>(k) * (k + 1) * (2 * k + 1) * xpow);
        sum += term;
        if (term < 1e-15 * (sum + 1e-300)) break;
    }
    return 0.5 * sum;
}

HookIntegralCheck hook_integral_check(const Partition& lambda, int row, int col)
{
    if (row < 1 || row > lambda.length() || col < 1 || col > lambda.part(row - 1))
        throw usage_error("hook_integral_check: cell outside diagram");
    Partition conj = lambda.conjugate();
    int h = (lambda.part(row - 1) - col) + (conj.part(col - 1) - row) + 1;
    HookIntegralCheck out;
    out.lhs = std::log(static_cast<double>(h));
    double hd = static_cast<double>(h);
    out.rhs = phi(hd + 1.0) - 2.0 * phi(hd) + phi(hd - 1.0) + c_correction(hd);
    return out;
}

namespace {

struct QuotientPoint {
    Partition alpha, beta;
    double weight = 0.0;
};

// all balanced lambda of size n through their quotient pairs, with w(lambda)
std::vector<QuotientPoint> quotient_points(long n)
{
    if (n < 0 || n % 2) throw usage_error("quotient sweep: size must be even");
    std::vector<QuotientPoint> out;
    for (long a = 0; a <= n / 2; ++a) {
        for (const Partition& alpha : enumerate_partitions(static_cast<int>(a))) {
            for (const Partition& beta : enumerate_partitions(static_cast<int>(n / 2 - a))) {
                TwoQuotient q;
                q.alpha = alpha;
                q.beta = beta;
                Partition lambda = from_core_quotient(q);
                QuotientPoint p;
                p.alpha = alpha;
                p.beta = beta;
                p.weight = mpq_get_d(pillowcase_weight_hooks(lambda).get_mpq_t());
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

} // namespace

double concentration_profile(long n, double eps, long bound)
{
    if (n > bound)
        throw resource_error("concentration_profile: n " + std::to_string(n) +
                             " above bound " + std::to_string(bound));
    double total = 0.0, far = 0.0;
    for (const QuotientPoint& p : quotient_points(n)) {
        total += p.weight;
        double d2 = sobolev_norm_sq(contour_at_scale(p.alpha, n), contour_at_scale(p.beta, n));
        if (std::sqrt(std::max(d2, 0.0)) > eps) far += p.weight;
    }
    return far / total;
}

double mean_contour_distance(long n, long bound)
{
    if (n > bound)
        throw resource_error("mean_contour_distance: n " + std::to_string(n) +
                             " above bound " + std::to_string(bound));
    double total = 0.0;
    const double x_max = 4.0;
    const int grid = 801;
    std::vector<double> mean(grid, 0.0);
    for (const QuotientPoint& p : quotient_points(n)) {
        TwoQuotient q;
        q.alpha = p.alpha;
        q.beta = p.beta;
        Contour c = contour_at_scale(from_core_quotient(q), 2 * n);
        total += p.weight;
        for (int i = 0; i < grid; ++i) {
            double x = -x_max + 2.0 * x_max * i / (grid - 1);
            mean[static_cast<std::size_t>(i)] += p.weight * c.value(x);
        }
    }
    double sup = 0.0;
    for (int i = 0; i < grid; ++i) {
        double x = -x_max + 2.0 * x_max * i / (grid - 1);
        sup = std::max(sup, std::fabs(mean[static_cast<std::size_t>(i)] / total - omega_rot(x)));
    }
    return sup;
}

std::vector<PkTrendRow> p_k_trend(int k, const std::vector<long>& sizes, long bound)
{
    if (k < 1) throw usage_error("p_k_trend: k must be positive");
    const double mu = limit_moments(k - 1);
    const double moment_c = k * mu;
    const double rim_c = k * std::pow(2.0, (k - 1) / 2.0) * mu;
    std::vector<PkTrendRow> rows;
    for (long n : sizes) {
        if (n > bound)
            throw resource_error("p_k_trend: n " + std::to_string(n) + " above bound " +
                                 std::to_string(bound));
        double total = 0.0, acc = 0.0;
        for (const QuotientPoint& p : quotient_points(n)) {
            TwoQuotient q;
            q.alpha = p.alpha;
            q.beta = p.beta;
            Partition lambda = from_core_quotient(q);
            total += p.weight;
            acc += p.weight *
                   mpq_get_d(shifted_power(static_cast<unsigned>(k), lambda).get_mpq_t());
        }
        PkTrendRow row;
        row.n = n;
        row.scaled = acc / total / std::pow(static_cast<double>(n), (k + 1) / 2.0);
        row.moment_constant = moment_c;
        row.rim_constant = rim_c;
        row.gap_moment = std::fabs(row.scaled - moment_c);
        row.gap_rim = std::fabs(row.scaled - rim_c);
        rows.push_back(row);
    }
    return rows;
}

std::vector<WeightEstimateRow> weight_estimate_diagnostic(const std::vector<long>& sizes,
                                                          long exhaustive_bound,
                                                          std::size_t sample_count)
{
    std::vector<WeightEstimateRow> rows;
    for (long n : sizes) {
        WeightEstimateRow row;
        row.n = n;
        auto ratio = [&](const Partition& alpha, const Partition& beta) {
            TwoQuotient q;
            q.alpha = alpha;
            q.beta = beta;
            Partition lambda = from_core_quotient(q);
            double logw = std::log(mpq_get_d(pillowcase_weight_hooks(lambda).get_mpq_t()));
            double d2 =
                sobolev_norm_sq(contour_at_scale(alpha, n), contour_at_scale(beta, n));
            return std::fabs(logw + 0.5 * static_cast<double>(n) * d2) /
                   std::sqrt(static_cast<double>(n));
        };
        if (n <= exhaustive_bound) {
            for (const QuotientPoint& p : quotient_points(n))
                row.max_ratio = std::max(row.max_ratio, ratio(p.alpha, p.beta));
        } else {
            row.sampled = true;
            std::mt19937_64 rng(static_cast<unsigned long>(n) * 0x9e3779b97f4a7c15UL + 1);
            for (std::size_t s = 0; s < sample_count; ++s) {
                long a = static_cast<long>(rng() % static_cast<unsigned long>(n / 2 + 1));
                auto random_partition = [&rng](long size) {
                    std::vector<int> parts;
                    long rem = size;
                    while (rem > 0) {
                        long part = 1 + static_cast<long>(rng() % static_cast<unsigned long>(rem));
                        parts.push_back(static_cast<int>(part));
                        rem -= part;
                    }
                    std::sort(parts.begin(), parts.end(), std::greater<int>());
                    return Partition{std::move(parts)};
                };
                row.max_ratio =
                    std::max(row.max_ratio, ratio(random_partition(a), random_partition(n / 2 - a)));
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::string concentration_csv(const std::vector<long>& sizes, const std::vector<double>& epsilons,
                              long bound)
{
    std::ostringstream out;
    out << "n,eps,probability\n";
    out.precision(12);
    for (long n : sizes)
        for (double eps : epsilons)
            out << n << "," << eps << "," << concentration_profile(n, eps, bound) << "\n";
    return out.str();
}

std::string mean_curve_csv(long n, long bound)
{
    if (n > bound)
        throw resource_error("mean_curve_csv: n " + std::to_string(n) + " above bound " +
                             std::to_string(bound));
    double total = 0.0;
    const double x_max = 4.0;
    const int grid = 161;
    std::vector<double> mean(grid, 0.0);
    for (const QuotientPoint& p : quotient_points(n)) {
        TwoQuotient q;
        q.alpha = p.alpha;
        q.beta = p.beta;
        Contour c = contour_at_scale(from_core_quotient(q), 2 * n);
        total += p.weight;
        for (int i = 0; i < grid; ++i) {
            double x = -x_max + 2.0 * x_max * i / (grid - 1);
            mean[static_cast<std::size_t>(i)] += p.weight * c.value(x);
        }
    }
    std::ostringstream out;
    out << "x,mean_contour,omega\n";
    out.precision(12);
    for (int i = 0; i < grid; ++i) {
        double x = -x_max + 2.0 * x_max * i / (grid - 1);
        out << x << "," << mean[static_cast<std::size_t>(i)] / total << "," << omega_rot(x)
            << "\n";
    }
    return out.str();
}

} // namespace pillowcase
