#ifndef GIM_LINALG_HPP
#define GIM_LINALG_HPP

#include "gim/matrix.hpp"

namespace gim {

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. The 0x0 determinant is 1. Throws on non-square input.
Rational det(const RMatrix& a);

/// Exact rank by Gaussian elimination over the rationals.
std::size_t rank(const RMatrix& a);

/// Matrix-vector product.
std::vector<Rational> mat_vec(const RMatrix& a, const std::vector<Rational>& x);

}  // namespace gim

#endif  // GIM_LINALG_HPP
