#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pillowcase/arith.hpp"
#include "pillowcase/partition.hpp"

namespace pillowcase {

/** dim lambda by the hook length formula. */
Int dimension(const Partition& lambda);

/** Number of standard tableaux of the skew shape outer/inner (Aitken determinant). */
Int skew_dimension(const Partition& outer, const Partition& inner);

/** Brute-force standard-tableau counter; test oracle only (exponential-ish). */
Int skew_syt_count_bruteforce(const Partition& outer, const Partition& inner);

/**
 * Murnaghan–Nakayama: chi^{outer/inner}(rho) by border-strip recursion on the
 * beta-set.  rho need not be sorted.  inner = () gives the straight character.
 */
Int mn_character(const Partition& outer, const Partition& inner, const Partition& rho);

/**
 * chi^{outer/inner}(2,2,...,2) via the 2-quotient fast path:
 * zero unless the cores agree and the quotient components contain each other;
 * otherwise (-1)^{(o-o')/2} C(|outer/inner|/2, |A/a|) dim(A/a) dim(B/b).
 * Cross-validated against mn_character in the test suite.
 */
Int involution_character(const Partition& outer, const Partition& inner);

/**
 * chi^lambda(rho, 2, 2, ..., 2) where the type is rho padded with twos to
 * |lambda|: strips the parts of rho by MN, then dispatches the all-twos tail
 * to involution_character.  This is the workhorse for central characters on
 * near-involution classes.
 */
Int near_involution_character(const Partition& lambda, const Partition& rho);

/**
 * Central character f_eta(lambda) = |C| chi^lambda(tau) / dim lambda where
 * tau is eta padded with twos to |lambda| (|lambda| - |eta| must be even).
 */
Rational central_character(const Partition& eta, const Partition& lambda);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> rows;    // irreducibles, reverse-lex
    std::vector<Partition> columns; // classes, reverse-lex
    std::vector<std::vector<Int>> values;

    const Int& at(int row, int col) const { return values[row][col]; }
    int row_index(const Partition& mu) const;
    int col_index(const Partition& nu) const;
};

/** Full character table of S_n via MN; n capped (default bound 12). */
CharacterTable character_table(int n, int bound = 12);

} // namespace pillowcase
