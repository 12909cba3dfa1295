#include "pillowcase/shifted.hpp"

#include <algorithm>
#include <vector>

#include "pillowcase/characters.hpp"
#include "pillowcase/eigen_support.hpp"
#include "pillowcase/errors.hpp"
#include "pillowcase/linalg.hpp"

namespace pillowcase {

namespace {

Rational rational_pow(Rational base, unsigned k)
{
    Rational out(1);
    while (k) {
        if (k & 1u) out *= base;
        base *= base;
        k >>= 1u;
    }
    return out;
}

} // namespace

Rational shifted_power(unsigned k, const Partition& lambda)
{
    Rational out = (Rational(1) - pow2(-static_cast<long>(k))) * zeta_neg(k);
    for (int i = 1; i <= lambda.length(); ++i) {
        out += rational_pow(Rational(2 * lambda.part(i - 1) - 2 * i + 1, 2), k);
        out -= rational_pow(Rational(-2 * i + 1, 2), k);
    }
    return out;
}

Rational shifted_power_product(const Partition& mu, const Partition& lambda)
{
    Rational out(1);
    for (int part : mu.parts()) out *= shifted_power(static_cast<unsigned>(part), lambda);
    return out;
}

Rational shifted_schur_padded(const Partition& mu, const Partition& lambda, int n)
{
    if (n < lambda.length() || n < mu.length())
        throw usage_error("shifted_schur_padded: padding below partition length");
    if (n == 0) return Rational(1);

    std::vector<Int> y(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        y[static_cast<std::size_t>(i - 1)] = Int(lambda.part(i - 1) + n - i);

    IntMatrix num(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            num(i, j) = falling_factorial(y[static_cast<std::size_t>(i)],
                                          static_cast<unsigned long>(mu.part(j) + n - j - 1));

    // denominator determinant det[y_i^{n-j}] is the Vandermonde product
    Int den(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            den *= y[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(j)];

    return Rational(bareiss_determinant(std::move(num))) / Rational(den);
}

Rational shifted_schur(const Partition& mu, const Partition& lambda)
{
    return shifted_schur_padded(mu, lambda, std::max(lambda.length(), mu.length()) + 1);
}

Rational oo_dim_ratio(const Partition& lambda, const Partition& mu)
{
    if (mu.size() > lambda.size())
        throw usage_error("oo_dim_ratio: |mu| exceeds |lambda|");
    Int den = falling_factorial(Int(lambda.size()), static_cast<unsigned long>(mu.size()));
    return shifted_schur(mu, lambda) / Rational(den);
}

Rational v_function(const Partition& eta)
{
    if (eta.size() < 2) throw usage_error("v_function: |eta| < 2");
    Rational diff = shifted_schur(Partition{{2}}, eta) - shifted_schur(Partition{{1, 1}}, eta);
    return Rational(dimension(eta)) * diff /
           Rational(factorial(static_cast<unsigned long>(eta.size() - 2)) *
                    factorial(static_cast<unsigned long>(eta.size())));
}

std::pair<Int, Int> chi_two_one_identity(const Partition& eta)
{
    const int n = eta.size();
    if (n < 2) throw usage_error("chi_two_one_identity: |eta| < 2");

    std::vector<int> type{2};
    for (int i = 0; i < n - 2; ++i) type.push_back(1);
    Int direct = mn_character(eta, Partition(), Partition{std::move(type)});

    Rational diff = shifted_schur(Partition{{2}}, eta) - shifted_schur(Partition{{1, 1}}, eta);
    Rational formula = Rational(dimension(eta)) * diff / Rational(n * (n - 1));
    if (formula.get_den() != 1)
        throw consistency_error("chi_two_one_identity: non-integer value for " + eta.to_string());
    return {direct, formula.get_num()};
}

} // namespace pillowcase
