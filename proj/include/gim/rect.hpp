#ifndef GIM_RECT_HPP
#define GIM_RECT_HPP

#include <optional>

#include "gim/matrix.hpp"

namespace gim {

/*
 * Full-rank test for a rectangular classical interval matrix via orthant
 * decomposition of |C x| <= Delta |x|: the matrix has full rank iff the
 * system has only the trivial solution. Each orthant restriction is an
 * exact linear feasibility problem.
 */

/// Orthant restriction of |C x| <= Delta |x| written over u = T_s x >= 0:
/// rows of a_ub * u <= b_ub encode (C T_s - Delta) u <= 0 and
/// (-C T_s - Delta) u <= 0; a_eq * u = b_eq is the normalization
/// 1^T u = 1 that excludes u = 0.
struct OrthantSystem {
  std::vector<int> signs;
  RMatrix a_ub;
  std::vector<Rational> b_ub;
  RMatrix a_eq;
  std::vector<Rational> b_eq;
};

/// Build the feasibility system of one orthant. `signs` has one entry in
/// {-1,+1} per column of mu.
OrthantSystem orthant_system(const GIMatrix& mu, const std::vector<int>& signs);

/// Evidence for a negative verdict: a nonzero vector x and a contained
/// completion A with A x = 0, both exact. Verified at construction.
struct RectWitness {
  std::vector<Rational> x;
  RMatrix completion;
};

struct RectResult {
  bool full_rank = false;
  std::optional<RectWitness> witness;  // set iff !full_rank
};

/// Decide full rank (= min{p,q}) for a classical interval matrix. Wide
/// matrices (p < q) are tested through their transpose; the witness then
/// refers to the transposed system. Throws on half-bounded or unbounded
/// entries.
RectResult rect_full_rank(const GIMatrix& mu);

}  // namespace gim

#endif  // GIM_RECT_HPP
