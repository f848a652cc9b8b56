#include "gim/rohn.hpp"

#include <bit>
#include <stdexcept>

namespace gim {

namespace {

void require_classical(const GIMatrix& mu, const char* who) {
  if (!is_classical(mu))
    throw std::invalid_argument(std::string(who) +
                                ": entry is half-bounded or unbounded");
}

void require_square(const GIMatrix& mu, const char* who) {
  if (!mu.is_square())
    throw std::invalid_argument(std::string(who) + ": matrix not square");
}

// One bitmask per 2x2 submatrix whose four entries are all bounded, over the
// row-major bounded-cell bit positions. A selector is even type iff it hits
// every mask an even number of times.
std::vector<std::uint64_t> even_type_masks(const GIMatrix& mu,
                                           const std::vector<Cell>& bounded) {
  if (bounded.size() > 63)
    throw std::invalid_argument("vertex enumeration: more than 63 bounded cells");
  std::vector<std::vector<int>> bit_at(mu.rows(),
                                       std::vector<int>(mu.cols(), -1));
  for (std::size_t t = 0; t < bounded.size(); ++t)
    bit_at[bounded[t].row][bounded[t].col] = static_cast<int>(t);

  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t i2 = i + 1; i2 < mu.rows(); ++i2)
      for (std::size_t j = 0; j < mu.cols(); ++j)
        for (std::size_t j2 = j + 1; j2 < mu.cols(); ++j2) {
          const int b1 = bit_at[i][j], b2 = bit_at[i][j2];
          const int b3 = bit_at[i2][j], b4 = bit_at[i2][j2];
          if (b1 < 0 || b2 < 0 || b3 < 0 || b4 < 0) continue;
          masks.push_back((1ULL << b1) | (1ULL << b2) | (1ULL << b3) |
                          (1ULL << b4));
        }
  return masks;
}

bool selector_even(std::uint64_t selector,
                   const std::vector<std::uint64_t>& masks) {
  for (std::uint64_t mask : masks)
    if (std::popcount(selector & mask) % 2 != 0) return false;
  return true;
}

}  // namespace

RMatrix center(const GIMatrix& mu) {
  require_classical(mu, "center");
  RMatrix out(mu.rows(), mu.cols());
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j)
      out(i, j) = (mu(i, j).lower() + mu(i, j).upper()) / 2;
  return out;
}

RMatrix radius(const GIMatrix& mu) {
  require_classical(mu, "radius");
  RMatrix out(mu.rows(), mu.cols());
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j)
      out(i, j) = (mu(i, j).upper() - mu(i, j).lower()) / 2;
  return out;
}

RMatrix absmat(const GIMatrix& mu) {
  require_classical(mu, "absmat");
  RMatrix out(mu.rows(), mu.cols());
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j)
      out(i, j) = std::max(rational_abs(mu(i, j).lower()),
                           rational_abs(mu(i, j).upper()));
  return out;
}

RMatrix vertex_from_signs(const GIMatrix& mu, const SignVector& x,
                          const SignVector& y) {
  require_classical(mu, "vertex_from_signs");
  require_square(mu, "vertex_from_signs");
  if (x.size() != mu.rows() || y.size() != mu.rows())
    throw std::invalid_argument("vertex_from_signs: sign vector length");
  RMatrix out(mu.rows(), mu.cols());
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j) {
      const Rational c = (mu(i, j).lower() + mu(i, j).upper()) / 2;
      const Rational d = (mu(i, j).upper() - mu(i, j).lower()) / 2;
      out(i, j) = c - x[i] * d * y[j];
    }
  return out;
}

RohnResult rohn_full_rank_signs_report(const GIMatrix& mu) {
  require_classical(mu, "rohn_full_rank_signs");
  require_square(mu, "rohn_full_rank_signs");
  const std::size_t p = mu.rows();
  if (p == 0) return {true, std::nullopt};
  if (p > 63)
    throw std::invalid_argument("rohn_full_rank_signs: dimension too large");

  bool have_first = false;
  RMatrix first;
  Rational first_det;
  int expected_sign = 0;

  // (x,y) and (-x,-y) select the same matrix, so x[0] stays +1.
  SignVector x(p, 1), y(p, 1);
  const std::uint64_t x_count = 1ULL << (p - 1), y_count = 1ULL << p;
  for (std::uint64_t xb = 0; xb < x_count; ++xb) {
    for (std::size_t i = 1; i < p; ++i) x[i] = (xb >> (i - 1)) & 1 ? -1 : 1;
    for (std::uint64_t yb = 0; yb < y_count; ++yb) {
      for (std::size_t j = 0; j < p; ++j) y[j] = (yb >> j) & 1 ? -1 : 1;
      RMatrix v = vertex_from_signs(mu, x, y);
      const Rational d = det(v);
      const int s = sign_of(d);
      if (!have_first) {
        have_first = true;
        first = v;
        first_det = d;
        expected_sign = s;
      }
      if (s == 0 || s != expected_sign)
        return {false, SignConflict{first, std::move(v), first_det, d}};
    }
  }
  return {true, std::nullopt};
}

bool rohn_full_rank_signs(const GIMatrix& mu) {
  return rohn_full_rank_signs_report(mu).full_rank;
}

GIMatrix vertex_from_selector(const GIMatrix& mu,
                              const std::vector<Cell>& bounded,
                              std::uint64_t selector) {
  if (bounded.size() > 63)
    throw std::invalid_argument("vertex enumeration: more than 63 bounded cells");
  GIMatrix out = mu;
  for (std::size_t t = 0; t < bounded.size(); ++t) {
    const GInterval& e = mu.at(bounded[t].row, bounded[t].col);
    const bool take_upper = (selector >> t) & 1;
    out(bounded[t].row, bounded[t].col) =
        GInterval::constant(take_upper ? e.upper() : e.lower());
  }
  return out;
}

bool for_each_vertex_matrix(const GIMatrix& mu,
                            const std::function<bool(const GIMatrix&)>& visit) {
  const auto cells = bounded_cells(mu);
  if (cells.size() > 63)
    throw std::invalid_argument("vertex enumeration: more than 63 bounded cells");
  const std::uint64_t count = 1ULL << cells.size();
  for (std::uint64_t sel = 0; sel < count; ++sel)
    if (!visit(vertex_from_selector(mu, cells, sel))) return false;
  return true;
}

std::vector<GIMatrix> vertex_matrices(const GIMatrix& mu) {
  std::vector<GIMatrix> out;
  for_each_vertex_matrix(mu, [&](const GIMatrix& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

bool is_even_type(const GIMatrix& mu, const GIMatrix& gamma) {
  if (mu.rows() != gamma.rows() || mu.cols() != gamma.cols())
    throw std::invalid_argument("is_even_type: dimension mismatch");
  const auto cells = bounded_cells(mu);
  std::uint64_t selector = 0;
  for (std::size_t t = 0; t < cells.size(); ++t) {
    const GInterval& e = mu(cells[t].row, cells[t].col);
    const GInterval& g = gamma(cells[t].row, cells[t].col);
    if (!g.is_constant() || (g.value() != e.lower() && g.value() != e.upper()))
      throw std::invalid_argument("is_even_type: gamma is not a vertex matrix");
    if (g.value() == e.upper()) selector |= 1ULL << t;
  }
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j)
      if (!mu(i, j).is_bounded() && gamma(i, j) != mu(i, j))
        throw std::invalid_argument("is_even_type: gamma is not a vertex matrix");
  return selector_even(selector, even_type_masks(mu, cells));
}

bool for_each_even_type_vertex_matrix(
    const GIMatrix& mu, const std::function<bool(const GIMatrix&)>& visit) {
  const auto cells = bounded_cells(mu);
  const auto masks = even_type_masks(mu, cells);
  const std::uint64_t count = 1ULL << cells.size();
  for (std::uint64_t sel = 0; sel < count; ++sel) {
    if (!selector_even(sel, masks)) continue;
    if (!visit(vertex_from_selector(mu, cells, sel))) return false;
  }
  return true;
}

std::vector<GIMatrix> even_type_vertex_matrices(const GIMatrix& mu) {
  std::vector<GIMatrix> out;
  for_each_even_type_vertex_matrix(mu, [&](const GIMatrix& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

RohnResult rohn_full_rank_vertex_report(const GIMatrix& mu) {
  require_classical(mu, "rohn_full_rank_vertex");
  require_square(mu, "rohn_full_rank_vertex");

  bool have_first = false;
  RMatrix first;
  Rational first_det;
  int expected_sign = 0;
  std::optional<SignConflict> conflict;

  for_each_even_type_vertex_matrix(mu, [&](const GIMatrix& v) {
    RMatrix m = to_rmatrix(v);
    const Rational d = det(m);
    const int s = sign_of(d);
    if (!have_first) {
      have_first = true;
      first = m;
      first_det = d;
      expected_sign = s;
    }
    if (s == 0 || s != expected_sign) {
      conflict = SignConflict{first, std::move(m), first_det, d};
      return false;
    }
    return true;
  });
  if (conflict) return {false, std::move(conflict)};
  return {true, std::nullopt};
}

bool rohn_full_rank_vertex(const GIMatrix& mu) {
  return rohn_full_rank_vertex_report(mu).full_rank;
}

}  // namespace gim
