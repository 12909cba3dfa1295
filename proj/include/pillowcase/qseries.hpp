#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pillowcase/arith.hpp"
#include "pillowcase/partition.hpp"

namespace pillowcase {

/**
 * Truncated power series in q with exact rational coefficients.
 * All arithmetic is exact; a product truncates to the smaller of
 * the two truncation degrees.
 */
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(long truncation);
    QSeries(long truncation, Rational constant_term);

    long truncation() const { return static_cast<long>(coeff_.size()) - 1; }
    const Rational& coefficient(long k) const;
    void set_coefficient(long k, Rational value);

    QSeries& operator+=(const QSeries& other);
    QSeries& operator-=(const QSeries& other);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator*=(const QSeries& other) { return *this = *this * other; }
    QSeries& operator*=(const Rational& scalar);

    bool operator==(const QSeries&) const = default;

    /** Multiplicative inverse; requires nonzero constant term. */
    QSeries invert() const;

    /**
     * a^r for rational r via the first-order recurrence
     *   n b_n = sum_k ((r+1)k - n) a_k b_{n-k},
     * iterating only nonzero a_k (cheap for sparse a).  Fractional r
     * requires constant term 1; integer r any nonzero constant term.
     */
    QSeries pow_rational(const Rational& r) const;

private:
    std::vector<Rational> coeff_; // index = power of q
};

/**
 * Eisenstein series of weight 2k in q^scale:
 *   k=1: -1/24 + sum sigma_1(n) q^{scale n},  k=2: 1/240 + sum sigma_3(n) q^{scale n}.
 */
QSeries eisenstein(int k, int scale, long truncation);

/** prod_{i>=1} (1 - q^{2i}) truncated: sparse via the pentagonal number theorem. */
QSeries euler_product_even(long truncation);

/**
 * Monomials in the generators E2(q^2), E2(q^4), E4(q^4), encoded as partitions
 * with parts in {1,2,3} (part value = generator label).  `depth` bounds half
 * the modular weight: a monomial with a+b+c factors (c of them E4) has weight
 * 2(a+b+2c), and only those with a+b+2c <= depth are included.  An expectation
 * of a polynomial in the shifted powers p_{k_1}..p_{k_r} is quasimodular of
 * weight at most sum (k_i + 1), so depth = ceil(sum (k_i + 1) / 2) always
 * suffices; smaller depths drop the top of the filtration and the fit will
 * reject the series as out of span.  Enumeration: empty product first, then
 * by label sum a+2b+3c (reverse-lex within a sum), so cheap products come
 * first.  `pivots` indexes a maximal independent subset of the even
 * coefficient rows q^2, q^4, ..., chosen greedily in enumeration order (the
 * zero row of the constant monomial is never selected).
 */
struct QuasimodularBasis {
    int depth = 0;
    long truncation = 0;
    std::vector<Partition> products;   // products[0] = empty partition
    std::vector<QSeries> series;       // aligned with products
    std::vector<std::size_t> pivots;   // indices into products, ascending
};

QuasimodularBasis build_basis(int depth, long truncation);

struct QuasimodularFit {
    // Monomial -> coefficient; includes the empty product when nonzero.
    std::map<Partition, Rational> combination;
    // Even coefficients checked beyond the ones solved for (0 for a square solve).
    long held_out = 0;
};

/**
 * Express s exactly over the basis.  s must have zero odd coefficients.
 * When the pivot count is below the number of available even coefficients,
 * the extra coefficients are verified and any mismatch raises
 * consistency_error (not quasimodular at this depth / truncation too small).
 * The constant monomial's coefficient is recovered from the q^0 residual.
 */
QuasimodularFit fit_quasimodular(const QuasimodularBasis& basis, const QSeries& s);

/**
 * Finitely supported polynomial in H (= 1/h, q = e^h) and pi^2 with exact
 * rational coefficients, printable as e.g. "1/24 pi^2 H^2 + 1/4 H".
 */
class AsymptoticPoly {
public:
    AsymptoticPoly() = default;

    static AsymptoticPoly term(Rational c, int h_power, int pi2_power);

    void add_term(const Rational& c, int h_power, int pi2_power);
    Rational coefficient(int h_power, int pi2_power) const;
    /** Sum over pi powers of coefficient(h_power, k) * pi^{2k}, as double. */
    double h_coefficient_numeric(int h_power) const;

    bool is_zero() const { return terms_.empty(); }
    int max_h_power() const;

    AsymptoticPoly& operator+=(const AsymptoticPoly& other);
    AsymptoticPoly& operator-=(const AsymptoticPoly& other);
    friend AsymptoticPoly operator+(AsymptoticPoly a, const AsymptoticPoly& b) { return a += b; }
    friend AsymptoticPoly operator-(AsymptoticPoly a, const AsymptoticPoly& b) { return a -= b; }
    friend AsymptoticPoly operator*(const AsymptoticPoly& a, const AsymptoticPoly& b);
    AsymptoticPoly& operator*=(const AsymptoticPoly& other) { return *this = *this * other; }
    AsymptoticPoly& operator*=(const Rational& scalar);
    friend AsymptoticPoly operator*(AsymptoticPoly a, const Rational& s) { return a *= s; }

    bool operator==(const AsymptoticPoly&) const = default;

    /** Terms sorted by descending H power: "7/960 pi^4 H^4", "- 1/4 H", "0". */
    std::string to_text() const;
    /** {"terms":[{"h_power":j,"pi2_power":k,"coeff":"p/q"},...]}, descending j. */
    std::string to_json() const;

    // (h_power, pi2_power) -> coefficient, zeros erased.
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

private:
    std::map<std::pair<int, int>, Rational> terms_;
};

/** Generator label (1,2,3) -> asymptotic polynomial. */
using SubstitutionTable = std::map<int, AsymptoticPoly>;

/** {1: pi^2/24 H^2 + 1/4 H, 2: pi^2/96 H^2 + 1/8 H, 3: pi^4/3840 H^4}. */
SubstitutionTable default_substitution_table();

/**
 * One term per line: "<generator> <h_power> <pi2_power> <coefficient>";
 * blank lines and lines starting with '#' are skipped.
 */
SubstitutionTable load_substitution_table(const std::string& path);

AsymptoticPoly asymptotic_value(const QuasimodularFit& fit, const SubstitutionTable& table);

struct GeneratorValidation {
    int label = 0;                 // 0 = constant generator, else 1..3
    std::vector<double> fitted;    // fitted[j] ~ coefficient of H^j
    std::vector<double> expected;  // from the table, pi powers evaluated
    int leading_power = 0;         // highest H power with nonzero expected value
    double leading_rel_error = 0.0;
    bool pass = false;             // leading_rel_error <= 1e-6
};

/**
 * Numeric oracle for the substitution table: evaluate each generator's series
 * at q = e^{-h} on the grid, interpolate sum_j c_j h^{-j}, compare.  The gate
 * is relative error 1e-6 on the leading coefficient; sub-leading rows are
 * reported for inspection (the odd H powers differ in sign between the
 * table's h convention and real h > 0).
 */
std::vector<GeneratorValidation> validate_substitution_table(
    long truncation,
    const std::vector<double>& h_grid,
    const SubstitutionTable& table);

} // namespace pillowcase
