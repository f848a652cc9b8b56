#ifndef GIM_DETC_HPP
#define GIM_DETC_HPP

#include <functional>

#include "gim/matrix.hpp"

namespace gim {

/*
 * A partial generalized diagonal (pg-diagonal): a set of cells with pairwise
 * distinct rows and pairwise distinct columns. The empty diagonal is legal
 * and counts as totally nonconstant (vacuously).
 */
using PgDiagonal = std::vector<Cell>;

/// Determinant-like sum restricted to permutations that pass only through
/// constant entries; the empty sum is 0. Throws on non-square input.
Rational detc(const GIMatrix& nu);

/// Submatrix left after deleting the rows and columns of a pg-diagonal.
/// Throws std::invalid_argument if d repeats a row/column or is out of range.
GIMatrix complementary(const GIMatrix& nu, const PgDiagonal& d);

/// Visit every pg-diagonal of length k whose entries are all nonconstant,
/// cells sorted by row. Enumeration order is deterministic (lexicographic).
/// The visitor returns false to stop early; the function returns false iff
/// it was stopped.
bool for_each_totally_nonconstant_diagonal(
    const GIMatrix& nu, std::size_t k,
    const std::function<bool(const PgDiagonal&)>& visit);

/// All totally nonconstant pg-diagonals of length k (convenience).
std::vector<PgDiagonal> totally_nonconstant_diagonals(const GIMatrix& nu,
                                                      std::size_t k);

/// Maximal-rank deficiency test for a square p x p matrix: true iff
///   (1) there is no totally nonconstant pg-diagonal of length p, and
///   (2) every totally nonconstant pg-diagonal of length 0..p-1 has a
///       complementary matrix with detc equal to 0.
/// Equivalently, every contained real matrix is singular.
bool max_rank_lt_p(const GIMatrix& nu);

/// Maximal rank over all contained real matrices: the largest t such that
/// some t x t submatrix has either a totally nonconstant pg-diagonal of
/// length t, or one of length 0..t-1 whose complementary matrix has
/// detc != 0. Zero for the all-constant-zero matrix.
std::size_t max_rank(const GIMatrix& mu);

}  // namespace gim

#endif  // GIM_DETC_HPP
