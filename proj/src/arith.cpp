#include "pillowcase/arith.hpp"

#include <cctype>
#include <mutex>

namespace pillowcase {

Int factorial(unsigned long n)
{
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(const Int& n, unsigned long k)
{
    if (n >= 0 && n < static_cast<long>(k)) return Int(0);
    return falling_factorial(n, k) / factorial(k);
}

Int falling_factorial(const Int& n, unsigned long k)
{
    Int r(1);
    Int x = n;
    for (unsigned long i = 0; i < k; ++i) {
        r *= x;
        x -= 1;
    }
    return r;
}

Rational pow2(long e)
{
    Rational r(1);
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

std::string to_string(const Int& n)
{
    return n.get_str();
}

Rational parse_rational(std::string_view s)
{
    auto valid_int = [](std::string_view t) {
        if (!t.empty() && t.front() == '-') t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = s;
    std::string_view den;
    if (auto pos = s.find('/'); pos != std::string_view::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
        if (!valid_int(den)) throw io_error("bad rational: '" + std::string(s) + "'");
    }
    if (!valid_int(num)) throw io_error("bad rational: '" + std::string(s) + "'");

    Rational r(std::string(s), 10);
    if (r.get_den() == 0) throw io_error("bad rational (zero denominator): '" + std::string(s) + "'");
    r.canonicalize();
    return r;
}

namespace {
std::vector<Rational> bernoulli_cache{Rational(1)};
std::mutex bernoulli_mutex;
} // namespace

Rational bernoulli(unsigned k)
{
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    while (bernoulli_cache.size() <= k) {
        // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
        unsigned m = static_cast<unsigned>(bernoulli_cache.size());
        Rational sum(0);
        for (unsigned j = 0; j < m; ++j)
            sum += Rational(binomial(Int(m + 1), j)) * bernoulli_cache[j];
        bernoulli_cache.push_back(-sum / Rational(m + 1));
    }
    return bernoulli_cache[k];
}

Rational zeta_neg(unsigned k)
{
    return -bernoulli(k + 1) / Rational(k + 1);
}

std::uint64_t fnv1a64(std::string_view s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view s)
{
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(s);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace pillowcase
