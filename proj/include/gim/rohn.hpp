#ifndef GIM_ROHN_HPP
#define GIM_ROHN_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "gim/linalg.hpp"
#include "gim/matrix.hpp"

namespace gim {

/*
 * Classical machinery for bounded interval matrices: midpoint/radius
 * matrices, the sign-vector determinant test of Rohn, vertex matrices and
 * the even-type restatement. Constant entries are treated as degenerate
 * intervals [a,a] with radius 0.
 */

/// Entrywise midpoint (m+M)/2. Throws if any entry is half-bounded or
/// unbounded.
RMatrix center(const GIMatrix& mu);
/// Entrywise half-width (M-m)/2; all entries >= 0.
RMatrix radius(const GIMatrix& mu);
/// Entrywise max{|m|,|M|}.
RMatrix absmat(const GIMatrix& mu);

/// +1/-1 sign vector of length p.
using SignVector = std::vector<int>;

/// The vertex completion selected by sign vectors: entry (i,j) is
/// C(i,j) - x[i]*Delta(i,j)*y[j]. All-(+1) x and y give the left-endpoint
/// matrix; flipping x[i] moves row i to the opposite endpoints.
RMatrix vertex_from_signs(const GIMatrix& mu, const SignVector& x,
                          const SignVector& y);

/// Rohn's sign test for a square classical interval matrix: full rank iff
/// all det(vertex_from_signs(mu,x,y)) over x,y in {-1,+1}^p share one strict
/// sign. (x,y) and (-x,-y) select the same matrix, so x[0] is fixed to +1.
bool rohn_full_rank_signs(const GIMatrix& mu);

/// Visit all 2^k vertex matrices (k = number of bounded cells): each bounded
/// cell pinned to one endpoint, all other cells copied verbatim. Selector
/// bits are taken in row-major bounded-cell order, bit 0 = lower endpoint.
/// The visitor returns false to stop; the function returns false iff stopped.
bool for_each_vertex_matrix(const GIMatrix& mu,
                            const std::function<bool(const GIMatrix&)>& visit);

/// All vertex matrices (convenience; 2^k of them).
std::vector<GIMatrix> vertex_matrices(const GIMatrix& mu);

/// Build the vertex matrix for an explicit endpoint selector. Bit t of
/// `selector` chooses the upper endpoint of the t-th bounded cell
/// (row-major). Throws if mu has more than 64 bounded cells.
GIMatrix vertex_from_selector(const GIMatrix& mu,
                              const std::vector<Cell>& bounded,
                              std::uint64_t selector);

/// Even-type test: gamma is of even type iff every 2x2 submatrix of mu whose
/// four entries are all bounded picks an even number of lower endpoints in
/// gamma. Submatrices touching any non-bounded entry are exempt. Throws
/// std::invalid_argument if gamma is not a vertex matrix of mu.
bool is_even_type(const GIMatrix& mu, const GIMatrix& gamma);

/// Visit every even-type vertex matrix, in increasing selector order.
bool for_each_even_type_vertex_matrix(
    const GIMatrix& mu, const std::function<bool(const GIMatrix&)>& visit);

std::vector<GIMatrix> even_type_vertex_matrices(const GIMatrix& mu);

/// A pair of same-sign-violating vertex determinants, kept as the
/// machine-checkable evidence for a negative classical full-rank verdict.
struct SignConflict {
  RMatrix first;
  RMatrix second;
  Rational det_first;
  Rational det_second;
};

struct RohnResult {
  bool full_rank = false;
  std::optional<SignConflict> conflict;  // set iff !full_rank
};

/// Rohn's test evaluated over sign vectors, with the offending pair.
RohnResult rohn_full_rank_signs_report(const GIMatrix& mu);

/// Restated test: full rank iff every even-type vertex matrix has nonzero
/// determinant and all those determinants share one sign.
bool rohn_full_rank_vertex(const GIMatrix& mu);
RohnResult rohn_full_rank_vertex_report(const GIMatrix& mu);

}  // namespace gim

#endif  // GIM_ROHN_HPP
