#include "gim/linalg.hpp"

#include <stdexcept>

namespace gim {

// Fraction-free (Bareiss) elimination. Exact over the rationals; every
// division is by a previous pivot and leaves no remainder in the integer
// case, so intermediate growth stays polynomial.
Rational det(const RMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;

  RMatrix m = a;
  Rational prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot_row = k;
      while (pivot_row < n && m(pivot_row, k) == 0) ++pivot_row;
      if (pivot_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev_pivot;
      m(i, k) = 0;
    }
    prev_pivot = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

std::size_t rank(const RMatrix& a) {
  if (a.empty()) return 0;
  RMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot_row = r;
    while (pivot_row < rows && m(pivot_row, c) == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot_row, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<Rational> mat_vec(const RMatrix& a,
                              const std::vector<Rational>& x) {
  if (a.cols() != x.size())
    throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<Rational> out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

}  // namespace gim
