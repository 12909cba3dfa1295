#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pillowcase/arith.hpp"
#include "pillowcase/eigen_support.hpp"
#include "pillowcase/errors.hpp"

namespace pillowcase {

/**
 * Fraction-free (Bareiss) determinant of an integer matrix.  All intermediate
 * divisions are exact; the input is taken by value and consumed.
 */
inline Int bareiss_determinant(IntMatrix m)
{
    const long n = m.rows();
    if (n != m.cols()) throw usage_error("bareiss_determinant: square matrix required");
    if (n == 0) return Int(1);

    Int prev(1);
    int sign = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            long p = -1;
            for (long i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { p = i; break; }
            if (p < 0) return Int(0);
            m.row(k).swap(m.row(p));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    Int det = m(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

/**
 * Plain exact Gaussian determinant over the rationals; fine for the modest
 * sizes the skew-dimension determinant needs.
 */
inline Rational rational_determinant(RationalMatrix m)
{
    const long n = m.rows();
    if (n != m.cols()) throw usage_error("rational_determinant: square matrix required");
    Rational det(1);
    for (long k = 0; k < n; ++k) {
        long p = -1;
        for (long i = k; i < n; ++i)
            if (m(i, k) != 0) { p = i; break; }
        if (p < 0) return Rational(0);
        if (p != k) { m.row(k).swap(m.row(p)); det = -det; }
        det *= m(k, k);
        Rational inv = 1 / m(k, k);
        for (long i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rational f = m(i, k) * inv;
            for (long j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

/**
 * Solve A x = b exactly where A has full column rank.  Throws
 * consistency_error when the rank is deficient (message includes the rank) or
 * when the system is inconsistent.  Rows beyond the first rank-many
 * independent ones act as held-out checks; the count of such rows that were
 * verified rather than solved is written to *held_out when non-null.
 */
inline RationalVector solve_full_column_rank(RationalMatrix a, RationalVector b,
                                             long* held_out = nullptr)
{
    const long rows = a.rows();
    const long cols = a.cols();
    if (b.size() != rows) throw usage_error("solve_full_column_rank: size mismatch");

    std::vector<bool> used(static_cast<std::size_t>(rows), false);
    std::vector<long> pivot_row(static_cast<std::size_t>(cols), -1);
    for (long c = 0; c < cols; ++c) {
        long p = -1;
        for (long r = 0; r < rows; ++r)
            if (!used[static_cast<std::size_t>(r)] && a(r, c) != 0) { p = r; break; }
        if (p < 0) {
            long rank = 0;
            for (long k = 0; k < cols; ++k) rank += pivot_row[static_cast<std::size_t>(k)] >= 0;
            throw consistency_error("solve_full_column_rank: rank " + std::to_string(rank) +
                                    " below column count " + std::to_string(cols));
        }
        used[static_cast<std::size_t>(p)] = true;
        pivot_row[static_cast<std::size_t>(c)] = p;
        Rational inv = 1 / a(p, c);
        for (long r = 0; r < rows; ++r) {
            if (r == p || a(r, c) == 0) continue;
            Rational f = a(r, c) * inv;
            for (long j = c; j < cols; ++j) a(r, j) -= f * a(p, j);
            b(r) -= f * b(p);
        }
    }

    long checked = 0;
    for (long r = 0; r < rows; ++r) {
        if (used[static_cast<std::size_t>(r)]) continue;
        ++checked;
        if (b(r) != 0)
            throw consistency_error("solve_full_column_rank: inconsistent held-out row " +
                                    std::to_string(r));
    }
    if (held_out) *held_out = checked;

    RationalVector x(cols);
    for (long c = 0; c < cols; ++c) {
        long p = pivot_row[static_cast<std::size_t>(c)];
        x(c) = b(p) / a(p, c);
    }
    return x;
}

} // namespace pillowcase
