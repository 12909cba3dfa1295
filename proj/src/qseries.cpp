#include "pillowcase/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pillowcase/eigen_support.hpp"
#include "pillowcase/errors.hpp"
#include "pillowcase/linalg.hpp"

namespace pillowcase {

QSeries::QSeries(long truncation)
{
    if (truncation < 0) throw usage_error("QSeries: negative truncation");
    coeff_.assign(static_cast<std::size_t>(truncation) + 1, Rational(0));
}

QSeries::QSeries(long truncation, Rational constant_term) : QSeries(truncation)
{
    coeff_[0] = std::move(constant_term);
}

const Rational& QSeries::coefficient(long k) const
{
    if (k < 0 || k > truncation())
        throw usage_error("QSeries::coefficient: index " + std::to_string(k) +
                          " outside truncation " + std::to_string(truncation()));
    return coeff_[static_cast<std::size_t>(k)];
}

void QSeries::set_coefficient(long k, Rational value)
{
    if (k < 0 || k > truncation())
        throw usage_error("QSeries::set_coefficient: index out of range");
    coeff_[static_cast<std::size_t>(k)] = std::move(value);
}

QSeries& QSeries::operator+=(const QSeries& other)
{
    coeff_.resize(static_cast<std::size_t>(std::min(truncation(), other.truncation())) + 1);
    for (std::size_t k = 0; k < coeff_.size(); ++k) coeff_[k] += other.coeff_[k];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& other)
{
    coeff_.resize(static_cast<std::size_t>(std::min(truncation(), other.truncation())) + 1);
    for (std::size_t k = 0; k < coeff_.size(); ++k) coeff_[k] -= other.coeff_[k];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    QSeries out(std::min(a.truncation(), b.truncation()));
    const long n = out.truncation();
    for (long i = 0; i <= n; ++i) {
        if (a.coeff_[static_cast<std::size_t>(i)] == 0) continue;
        for (long j = 0; i + j <= n; ++j) {
            if (b.coeff_[static_cast<std::size_t>(j)] == 0) continue;
            out.coeff_[static_cast<std::size_t>(i + j)] +=
                a.coeff_[static_cast<std::size_t>(i)] * b.coeff_[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

QSeries& QSeries::operator*=(const Rational& scalar)
{
    for (Rational& c : coeff_) c *= scalar;
    return *this;
}

QSeries QSeries::invert() const
{
    return pow_rational(Rational(-1));
}

QSeries QSeries::pow_rational(const Rational& r) const
{
    if (coeff_.empty()) throw usage_error("pow_rational: empty series");
    const Rational& a0 = coeff_[0];
    if (a0 == 0) throw usage_error("pow_rational: zero constant term");
    if (r.get_den() != 1 && a0 != 1)
        throw usage_error("pow_rational: fractional exponent needs constant term 1");

    const long n = truncation();
    QSeries out(n);

    // b_0 = a_0^r
    Rational b0(1);
    if (r.get_den() == 1) {
        long e = r.get_num().get_si();
        Rational base = e < 0 ? Rational(1) / a0 : a0;
        for (long i = 0; i < std::abs(e); ++i) b0 *= base;
    }
    out.coeff_[0] = b0;

    std::vector<long> support;
    for (long k = 1; k <= n; ++k)
        if (coeff_[static_cast<std::size_t>(k)] != 0) support.push_back(k);

    const Rational rp1 = r + 1;
    for (long m = 1; m <= n; ++m) {
        Rational acc(0);
        for (long k : support) {
            if (k > m) break;
            acc += (rp1 * k - m) * coeff_[static_cast<std::size_t>(k)] *
                   out.coeff_[static_cast<std::size_t>(m - k)];
        }
        out.coeff_[static_cast<std::size_t>(m)] = acc / (Rational(m) * a0);
    }
    return out;
}

QSeries eisenstein(int k, int scale, long truncation)
{
    if ((k != 1 && k != 2) || scale < 1)
        throw usage_error("eisenstein: supported weights are 2 (k=1) and 4 (k=2)");
    QSeries out(truncation, k == 1 ? Rational(-1, 24) : Rational(1, 240));
    const long bound = truncation / scale;
    std::vector<Int> sigma(static_cast<std::size_t>(bound) + 1, Int(0));
    for (long d = 1; d <= bound; ++d) {
        Int dk(d);
        if (k == 2) dk = dk * d * d;
        for (long m = d; m <= bound; m += d) sigma[static_cast<std::size_t>(m)] += dk;
    }
    for (long m = 1; m <= bound; ++m)
        out.set_coefficient(scale * m, Rational(sigma[static_cast<std::size_t>(m)]));
    return out;
}

QSeries euler_product_even(long truncation)
{
    QSeries out(truncation);
    out.set_coefficient(0, Rational(1));
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1); // 2 * pentagonal
        long g2 = k * (3 * k + 1);
        if (g1 > truncation) break;
        Rational sign(k % 2 ? -1 : 1);
        out.set_coefficient(g1, sign);
        if (g2 <= truncation) out.set_coefficient(g2, sign);
    }
    return out;
}

namespace {

// Row of even coefficients q^2, q^4, ..., q^{2M}.
std::vector<Rational> even_row(const QSeries& s, long m)
{
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(m));
    for (long j = 1; j <= m; ++j) row.push_back(s.coefficient(2 * j));
    return row;
}

} // namespace

QuasimodularBasis build_basis(int depth, long truncation)
{
    if (depth < 0) throw usage_error("build_basis: negative depth");
    if (truncation < 2) throw usage_error("build_basis: truncation below 2");

    QuasimodularBasis basis;
    basis.depth = depth;
    basis.truncation = truncation;

    // A product with a copies of E2(q^2), b of E2(q^4), c of E4(q^4) has
    // modular weight 2(a+b+2c); `depth` bounds a+b+2c, i.e. half the weight.
    // The label sum a+2b+3c of such a product is at most 2*depth.
    basis.products.push_back(Partition());
    for (int s = 1; s <= 2 * depth; ++s)
        for (const Partition& p : enumerate_partitions(s, PartitionFilter::all, 3)) {
            int half_weight = p.length();
            for (int part : p.parts())
                if (part == 3) ++half_weight;
            if (half_weight <= depth) basis.products.push_back(p);
        }

    const QSeries gen[3] = {eisenstein(1, 2, truncation), eisenstein(1, 4, truncation),
                            eisenstein(2, 4, truncation)};
    for (const Partition& p : basis.products) {
        QSeries s(truncation, Rational(1));
        for (int part : p.parts()) s *= gen[part - 1];
        basis.series.push_back(std::move(s));
    }

    // Greedy row reduction over the even coefficients; the constant's row is
    // zero, so it never enters the pivot set.
    const long m = truncation / 2;
    std::vector<std::vector<Rational>> reduced; // echelon rows, leading entry 1
    std::vector<std::size_t> leads;
    for (std::size_t i = 0; i < basis.products.size(); ++i) {
        std::vector<Rational> row = even_row(basis.series[i], m);
        for (std::size_t r = 0; r < reduced.size(); ++r) {
            const Rational& factor = row[leads[r]];
            if (factor == 0) continue;
            Rational f = factor;
            for (std::size_t c = 0; c < row.size(); ++c) row[c] -= f * reduced[r][c];
        }
        std::size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead == row.size()) continue;
        Rational inv = Rational(1) / row[lead];
        for (Rational& c : row) c *= inv;
        reduced.push_back(std::move(row));
        leads.push_back(lead);
        basis.pivots.push_back(i);
    }

    const long nonconstant = static_cast<long>(basis.products.size()) - 1;
    if (static_cast<long>(basis.pivots.size()) < std::min(nonconstant, m))
        throw consistency_error(
            "build_basis: truncation " + std::to_string(truncation) +
            " too small to separate the products; need at least " +
            std::to_string(2 * (nonconstant + 1)));
    return basis;
}

QuasimodularFit fit_quasimodular(const QuasimodularBasis& basis, const QSeries& s)
{
    if (s.truncation() < basis.truncation)
        throw usage_error("fit_quasimodular: series shorter than basis truncation");
    for (long k = 1; k <= basis.truncation; k += 2)
        if (s.coefficient(k) != 0)
            throw consistency_error("fit_quasimodular: nonzero odd coefficient at q^" +
                                    std::to_string(k));

    const long m = basis.truncation / 2;
    const long rank = static_cast<long>(basis.pivots.size());
    RationalMatrix a(m, rank);
    for (long c = 0; c < rank; ++c) {
        std::vector<Rational> col = even_row(basis.series[basis.pivots[static_cast<std::size_t>(c)]], m);
        for (long r = 0; r < m; ++r) a(r, c) = std::move(col[static_cast<std::size_t>(r)]);
    }
    RationalVector b(m);
    for (long r = 0; r < m; ++r) b(r) = s.coefficient(2 * (r + 1));

    QuasimodularFit fit;
    RationalVector x;
    try {
        x = solve_full_column_rank(std::move(a), std::move(b), &fit.held_out);
    } catch (const consistency_error& e) {
        throw consistency_error(std::string("fit_quasimodular: ") + e.what() +
                                " (not in the span at this depth, or truncation too small)");
    }

    Rational constant = s.coefficient(0);
    for (long c = 0; c < rank; ++c) {
        if (x(c) == 0) continue;
        const Partition& p = basis.products[basis.pivots[static_cast<std::size_t>(c)]];
        fit.combination[p] = x(c);
        constant -= x(c) * basis.series[basis.pivots[static_cast<std::size_t>(c)]].coefficient(0);
    }
    if (constant != 0) fit.combination[Partition()] = constant;
    return fit;
}

AsymptoticPoly AsymptoticPoly::term(Rational c, int h_power, int pi2_power)
{
    AsymptoticPoly p;
    p.add_term(c, h_power, pi2_power);
    return p;
}

void AsymptoticPoly::add_term(const Rational& c, int h_power, int pi2_power)
{
    if (c == 0) return;
    auto key = std::make_pair(h_power, pi2_power);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational AsymptoticPoly::coefficient(int h_power, int pi2_power) const
{
    auto it = terms_.find(std::make_pair(h_power, pi2_power));
    return it == terms_.end() ? Rational(0) : it->second;
}

double AsymptoticPoly::h_coefficient_numeric(int h_power) const
{
    double out = 0.0;
    for (const auto& [key, c] : terms_)
        if (key.first == h_power)
            out += mpq_get_d(c.get_mpq_t()) * std::pow(M_PI, 2 * key.second);
    return out;
}

int AsymptoticPoly::max_h_power() const
{
    int out = 0;
    for (const auto& [key, c] : terms_) out = std::max(out, key.first);
    return out;
}

AsymptoticPoly& AsymptoticPoly::operator+=(const AsymptoticPoly& other)
{
    for (const auto& [key, c] : other.terms_) add_term(c, key.first, key.second);
    return *this;
}

AsymptoticPoly& AsymptoticPoly::operator-=(const AsymptoticPoly& other)
{
    for (const auto& [key, c] : other.terms_) add_term(-c, key.first, key.second);
    return *this;
}

AsymptoticPoly operator*(const AsymptoticPoly& a, const AsymptoticPoly& b)
{
    AsymptoticPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
    return out;
}

AsymptoticPoly& AsymptoticPoly::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_) c *= scalar;
    return *this;
}

std::string AsymptoticPoly::to_text() const
{
    if (terms_.empty()) return "0";

    // descending H power, then descending pi power
    std::vector<std::pair<std::pair<int, int>, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        if (x.first.first != y.first.first) return x.first.first > y.first.first;
        return x.first.second > y.first.second;
    });

    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : sorted) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out << "- ";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        out << to_string(negative ? Rational(-c) : c);
        if (key.second == 1)
            out << " pi^2";
        else if (key.second != 0)
            out << " pi^" << 2 * key.second;
        if (key.first == 1)
            out << " H";
        else if (key.first != 0)
            out << " H^" << key.first;
    }
    return out.str();
}

std::string AsymptoticPoly::to_json() const
{
    std::vector<std::pair<std::pair<int, int>, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        if (x.first.first != y.first.first) return x.first.first > y.first.first;
        return x.first.second > y.first.second;
    });
    std::ostringstream out;
    out << "{\"terms\":[";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) out << ",";
        out << "{\"h_power\":" << sorted[i].first.first
            << ",\"pi2_power\":" << sorted[i].first.second << ",\"coeff\":\""
            << to_string(sorted[i].second) << "\"}";
    }
    out << "]}";
    return out.str();
}

SubstitutionTable default_substitution_table()
{
    SubstitutionTable t;
    t[1] = AsymptoticPoly::term(Rational(1, 24), 2, 1) + AsymptoticPoly::term(Rational(1, 4), 1, 0);
    t[2] = AsymptoticPoly::term(Rational(1, 96), 2, 1) + AsymptoticPoly::term(Rational(1, 8), 1, 0);
    t[3] = AsymptoticPoly::term(Rational(1, 3840), 4, 2);
    return t;
}

SubstitutionTable load_substitution_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw io_error("cannot open substitution table " + path);
    SubstitutionTable t;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        int label = 0, h_power = 0, pi2_power = 0;
        std::string coeff;
        if (!(ls >> label >> h_power >> pi2_power >> coeff) || label < 1 || label > 3)
            throw io_error(path + ":" + std::to_string(lineno) +
                           ": expected '<generator 1..3> <h_power> <pi2_power> <coefficient>'");
        t[label].add_term(parse_rational(coeff), h_power, pi2_power);
    }
    return t;
}

AsymptoticPoly asymptotic_value(const QuasimodularFit& fit, const SubstitutionTable& table)
{
    AsymptoticPoly out;
    for (const auto& [product, coeff] : fit.combination) {
        AsymptoticPoly term = AsymptoticPoly::term(coeff, 0, 0);
        for (int part : product.parts()) {
            auto it = table.find(part);
            if (it == table.end())
                throw usage_error("asymptotic_value: no table entry for generator " +
                                  std::to_string(part));
            term *= it->second;
        }
        out += term;
    }
    return out;
}

std::vector<GeneratorValidation> validate_substitution_table(long truncation,
                                                             const std::vector<double>& h_grid,
                                                             const SubstitutionTable& table)
{
    std::vector<GeneratorValidation> out;
    for (int label = 0; label <= 3; ++label) {
        AsymptoticPoly expected_poly = label == 0 ? AsymptoticPoly::term(Rational(1), 0, 0)
                                                  : table.at(label);
        QSeries series = label == 0   ? QSeries(truncation, Rational(1))
                         : label == 1 ? eisenstein(1, 2, truncation)
                         : label == 2 ? eisenstein(1, 4, truncation)
                                      : eisenstein(2, 4, truncation);
        const int jmax = expected_poly.max_h_power();
        if (static_cast<long>(h_grid.size()) < jmax + 1)
            throw usage_error("validate_substitution_table: grid smaller than degree + 1");

        // g(h) = h^jmax * f(e^{-h}) ~ c_jmax + c_{jmax-1} h + ... + c_0 h^jmax
        std::vector<long double> xs, gs;
        for (double h : h_grid) {
            long double q = std::exp(-static_cast<long double>(h));
            long double qq = 1.0L, sum = 0.0L;
            for (long k = 0; k <= truncation; ++k) {
                const Rational& c = series.coefficient(k);
                if (c != 0) sum += static_cast<long double>(mpq_get_d(c.get_mpq_t())) * qq;
                qq *= q;
            }
            xs.push_back(h);
            gs.push_back(sum * std::pow(static_cast<long double>(h), jmax));
        }

        // Newton divided differences, expanded to monomial coefficients.
        const std::size_t npts = xs.size();
        std::vector<long double> dd(gs);
        for (std::size_t level = 1; level < npts; ++level)
            for (std::size_t i = npts - 1; i >= level; --i)
                dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
        std::vector<long double> poly{dd[0]}; // coefficients in h, ascending
        std::vector<long double> basis{1.0L};
        for (std::size_t i = 1; i < npts; ++i) {
            // basis *= (h - xs[i-1])
            basis.push_back(0.0L);
            for (std::size_t c = basis.size() - 1; c > 0; --c)
                basis[c] = basis[c - 1] - xs[i - 1] * basis[c];
            basis[0] *= -xs[i - 1];
            poly.resize(std::max(poly.size(), basis.size()), 0.0L);
            for (std::size_t c = 0; c < basis.size(); ++c) poly[c] += dd[i] * basis[c];
        }

        GeneratorValidation v;
        v.label = label;
        for (int j = 0; j <= jmax; ++j) {
            // coefficient of H^j = coefficient of h^{jmax-j} in g
            std::size_t idx = static_cast<std::size_t>(jmax - j);
            v.fitted.push_back(idx < poly.size() ? static_cast<double>(poly[idx]) : 0.0);
            v.expected.push_back(expected_poly.h_coefficient_numeric(j));
        }
        v.leading_power = jmax;
        for (int j = jmax; j >= 0; --j)
            if (v.expected[static_cast<std::size_t>(j)] != 0.0) {
                v.leading_power = j;
                break;
            }
        double e = v.expected[static_cast<std::size_t>(v.leading_power)];
        double f = v.fitted[static_cast<std::size_t>(v.leading_power)];
        v.leading_rel_error = e == 0.0 ? std::abs(f) : std::abs(f - e) / std::abs(e);
        v.pass = v.leading_rel_error <= 1e-6;
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace pillowcase
