#include "pillowcase/weights.hpp"

#include <cmath>

#include "pillowcase/characters.hpp"
#include "pillowcase/errors.hpp"

namespace pillowcase {

Rational pillowcase_weight(const Partition& lambda)
{
    const int n = lambda.size();
    if (n % 2 || !is_balanced(lambda)) return Rational(0);
    if (n == 0) return Rational(1);

    // f_{(2,...,2)}(lambda) = |class| chi / dim
    Int cls = factorial(static_cast<unsigned long>(n)) /
              (pow2(n / 2).get_num() * factorial(static_cast<unsigned long>(n / 2)));
    Rational f = Rational(cls * involution_character(lambda, Partition())) /
                 Rational(dimension(lambda));
    Rational d = Rational(dimension(lambda)) /
                 Rational(factorial(static_cast<unsigned long>(n)));
    return d * d * f * f * f * f;
}

Rational pillowcase_weight_hooks(const Partition& lambda)
{
    if (!is_balanced(lambda))
        throw usage_error("pillowcase_weight_hooks: unbalanced " + lambda.to_string());
    Int odd(1), even(1);
    for (int h : hook_lengths(lambda)) (h % 2 ? odd : even) *= h;
    Rational r = Rational(odd) / Rational(even);
    return r * r;
}

QSeries weight_partition_function_series(long truncation)
{
    return euler_product_even(truncation).pow_rational(Rational(-1, 2));
}

double meinardus_ratio(long n)
{
    if (n <= 0) throw usage_error("meinardus_ratio: n must be positive");
    QSeries z = weight_partition_function_series(n);
    double zn = mpq_get_d(z.coefficient(n).get_mpq_t());
    // Meinardus with D(s) = zeta(s)/2 in the square variable: kappa = -7/8,
    // C = e^{zeta'(0)/2} (4 pi)^{-1/2} (pi^2/12)^{3/8} = 2^{-9/8} 3^{-3/8}
    // once the size is measured in q (not q^2).
    double scale = std::pow(2.0, 1.125) * std::pow(3.0, 0.375) *
                   std::pow(static_cast<double>(n), 0.875) *
                   std::exp(-M_PI * std::sqrt(static_cast<double>(n) / 6.0));
    return zn * scale;
}

} // namespace pillowcase
