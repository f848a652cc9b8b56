#include "gim/genfull.hpp"

#include <algorithm>

#include "gim/rohn.hpp"

namespace gim {

namespace {

void check_tuple(const GIMatrix& mu, const std::vector<Cell>& cells) {
  std::vector<bool> row_seen(mu.rows(), false), col_seen(mu.cols(), false);
  for (const Cell& cell : cells) {
    if (cell.row >= mu.rows() || cell.col >= mu.cols())
      throw std::invalid_argument("half-bounded tuple: cell out of range");
    if (row_seen[cell.row] || col_seen[cell.col])
      throw std::invalid_argument("half-bounded tuple: repeated row or column");
    if (!mu(cell.row, cell.col).is_half_bounded())
      throw std::invalid_argument("half-bounded tuple: cell is not half-bounded");
    row_seen[cell.row] = true;
    col_seen[cell.col] = true;
  }
}

// Enumerate tuples of half-bounded cells on distinct rows and columns,
// nonempty, cells in row-major order. Visitor returns false to stop.
bool tuples_rec(const std::vector<Cell>& cells, std::size_t start,
                std::vector<Cell>& current, std::vector<bool>& used_rows,
                std::vector<bool>& used_cols,
                const std::function<bool(const std::vector<Cell>&)>& visit) {
  for (std::size_t t = start; t < cells.size(); ++t) {
    const Cell& cell = cells[t];
    if (used_rows[cell.row] || used_cols[cell.col]) continue;
    used_rows[cell.row] = true;
    used_cols[cell.col] = true;
    current.push_back(cell);
    bool keep_going = visit(current);
    if (keep_going)
      keep_going = tuples_rec(cells, t + 1, current, used_rows, used_cols, visit);
    current.pop_back();
    used_rows[cell.row] = false;
    used_cols[cell.col] = false;
    if (!keep_going) return false;
  }
  return true;
}

bool for_each_half_bounded_tuple(
    const GIMatrix& mu, const std::function<bool(const std::vector<Cell>&)>& visit) {
  const auto cells = half_bounded_cells(mu);
  std::vector<Cell> current;
  std::vector<bool> used_rows(mu.rows(), false), used_cols(mu.cols(), false);
  return tuples_rec(cells, 0, current, used_rows, used_cols, visit);
}

std::vector<std::size_t> tuple_rows(const std::vector<Cell>& cells) {
  std::vector<std::size_t> out;
  for (const Cell& c : cells) out.push_back(c.row);
  return out;
}

std::vector<std::size_t> tuple_cols(const std::vector<Cell>& cells) {
  std::vector<std::size_t> out;
  for (const Cell& c : cells) out.push_back(c.col);
  return out;
}

// First maximal-rank witness inside a square minor, or nothing if the minor
// has maximal rank < its size. Full-length diagonals first, then shorter
// ones in increasing length.
struct MinorWitness {
  PgDiagonal diagonal;
  bool full_length = false;
  Rational detc_value;
};

std::optional<MinorWitness> find_minor_witness(const GIMatrix& minor) {
  const std::size_t n = minor.rows();
  std::optional<MinorWitness> found;
  for_each_totally_nonconstant_diagonal(minor, n, [&](const PgDiagonal& d) {
    found = MinorWitness{d, true, 0};
    return false;
  });
  if (found) return found;
  for (std::size_t k = 0; k < n && !found; ++k) {
    for_each_totally_nonconstant_diagonal(minor, k, [&](const PgDiagonal& d) {
      const Rational value = detc(complementary(minor, d));
      if (value != 0) {
        found = MinorWitness{d, false, value};
        return false;
      }
      return true;
    });
  }
  return found;
}

}  // namespace

int sign_exponent(const GIMatrix& mu, const HalfBoundedTuple& tuple) {
  check_tuple(mu, tuple.cells);
  const auto& cells = tuple.cells;
  unsigned parity = 0;
  for (std::size_t t = 0; t < cells.size(); ++t) {
    // 1-based position of cell t after deleting earlier rows and columns.
    std::size_t drop_rows = 0, drop_cols = 0;
    for (std::size_t r = 0; r < t; ++r) {
      if (cells[r].row < cells[t].row) ++drop_rows;
      if (cells[r].col < cells[t].col) ++drop_cols;
    }
    parity += (cells[t].row + 1 - drop_rows) + (cells[t].col + 1 - drop_cols);
    if (mu(cells[t].row, cells[t].col).is_right_bounded()) ++parity;
  }
  return parity % 2 == 0 ? 1 : -1;
}

bool monotone_box_nonneg(const MultilinearFn& f,
                         const std::vector<Rational>& base,
                         const std::vector<std::size_t>& free_dirs) {
  if (f(base) < 0) return false;
  for (std::size_t idx = 0; idx < free_dirs.size(); ++idx) {
    const std::size_t d = free_dirs[idx];
    if (d >= base.size())
      throw std::invalid_argument("monotone_box_nonneg: direction out of range");
    // Degree <= 1 in x_d, so the partial derivative is the unit finite
    // difference and no longer depends on x_d. The explicit return type
    // forces evaluation of the gmp expression template before the
    // temporaries die.
    MultilinearFn df = [f, d](const std::vector<Rational>& v) -> Rational {
      std::vector<Rational> hi = v;
      hi[d] += 1;
      const Rational up = f(hi);
      const Rational at = f(v);
      return up - at;
    };
    std::vector<std::size_t> rest = free_dirs;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
    if (!monotone_box_nonneg(df, base, rest)) return false;
  }
  return true;
}

UnboundedSplit split_unbounded(const GIMatrix& mu) {
  return {zero_unbounded(mu), unbounded_cells(mu)};
}

bool full_rank_half_bounded(const GIMatrix& rho) {
  if (!rho.is_square())
    throw std::invalid_argument("full_rank_half_bounded: matrix not square");
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j)
      if (rho(i, j).is_bounded() || rho(i, j).is_unbounded())
        throw std::invalid_argument(
            "full_rank_half_bounded: entry is bounded or unbounded");

  const RMatrix pinned = to_rmatrix(pin_half_bounded(rho));
  const Rational d0 = det(pinned);
  if (d0 == 0) return false;
  return for_each_half_bounded_tuple(rho, [&](const std::vector<Cell>& cells) {
    const int e = sign_exponent(rho, HalfBoundedTuple{cells});
    const Rational minor_det =
        det(erase_rows_cols(pinned, tuple_rows(cells), tuple_cols(cells)));
    return e * d0 * minor_det >= 0;
  });
}

bool full_rank_no_unbounded(const GIMatrix& nu) {
  if (!nu.is_square())
    throw std::invalid_argument("full_rank_no_unbounded: matrix not square");
  if (has_unbounded(nu))
    throw std::invalid_argument("full_rank_no_unbounded: unbounded entry");

  const RMatrix left = to_rmatrix(pin_half_bounded(take_left(nu)));
  const Rational det_left = det(left);
  if (det_left == 0) return false;
  const int left_sign = sign_of(det_left);

  return for_each_even_type_vertex_matrix(nu, [&](const GIMatrix& gamma) {
    if (!full_rank_half_bounded(gamma)) return false;
    const Rational d = det(to_rmatrix(pin_half_bounded(gamma)));
    return sign_of(d) == left_sign;
  });
}

Verdict full_rank_general(const GIMatrix& mu) {
  if (!mu.is_square())
    throw std::invalid_argument("full_rank_general: matrix not square");

  // (1) every minor complementary to an unbounded cell must have maximal
  // rank below its size.
  for (const Cell& cell : unbounded_cells(mu)) {
    const GIMatrix minor = erase_rows_cols(mu, {cell.row}, {cell.col});
    if (auto witness = find_minor_witness(minor))
      return {false, Condition1Violation{cell, witness->diagonal,
                                         witness->full_length,
                                         witness->detc_value}};
  }

  const GIMatrix zeroed = zero_unbounded(mu);
  const GIMatrix pinned = pin_half_bounded(zeroed);
  const RMatrix left = to_rmatrix(take_left(pinned));
  const Rational det_left = det(left);
  const int left_sign = sign_of(det_left);

  // (2) all even-type vertex completions share the strict sign of det(L).
  if (det_left == 0)
    return {false, Condition2Violation{left, left, det_left, det_left}};
  std::optional<Condition2Violation> c2;
  for_each_even_type_vertex_matrix(pinned, [&](const GIMatrix& v) {
    RMatrix m = to_rmatrix(v);
    const Rational d = det(m);
    if (sign_of(d) != left_sign) {
      c2 = Condition2Violation{std::move(m), left, d, det_left};
      return false;
    }
    return true;
  });
  if (c2) return {false, std::move(*c2)};

  // (3) signed cofactor products over half-bounded tuples, for every
  // even-type vertex matrix of the zeroed matrix.
  std::vector<HalfBoundedTuple> tuples;
  std::vector<int> tuple_signs;
  for_each_half_bounded_tuple(mu, [&](const std::vector<Cell>& cells) {
    tuples.push_back(HalfBoundedTuple{cells});
    tuple_signs.push_back(sign_exponent(mu, tuples.back()));
    return true;
  });
  if (!tuples.empty()) {
    std::optional<Condition3Violation> c3;
    for_each_even_type_vertex_matrix(zeroed, [&](const GIMatrix& gamma) {
      const RMatrix pinned_gamma = to_rmatrix(pin_half_bounded(gamma));
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        const Rational minor_det =
            det(erase_rows_cols(pinned_gamma, tuple_rows(tuples[t].cells),
                                tuple_cols(tuples[t].cells)));
        const Rational value = tuple_signs[t] * det_left * minor_det;
        if (value < 0) {
          c3 = Condition3Violation{gamma, tuples[t], value};
          return false;
        }
      }
      return true;
    });
    if (c3) return {false, std::move(*c3)};
  }

  return {true, AllConditionsHold{}};
}

namespace {

bool diagonal_totally_nonconstant(const GIMatrix& m, const PgDiagonal& d) {
  std::vector<bool> row_seen(m.rows(), false), col_seen(m.cols(), false);
  for (const Cell& cell : d) {
    if (cell.row >= m.rows() || cell.col >= m.cols()) return false;
    if (row_seen[cell.row] || col_seen[cell.col]) return false;
    if (!m(cell.row, cell.col).is_nonconstant()) return false;
    row_seen[cell.row] = true;
    col_seen[cell.col] = true;
  }
  return true;
}

bool verify_c1(const GIMatrix& mu, const Condition1Violation& v) {
  if (v.unbounded_cell.row >= mu.rows() || v.unbounded_cell.col >= mu.cols())
    return false;
  if (!mu(v.unbounded_cell.row, v.unbounded_cell.col).is_unbounded())
    return false;
  const GIMatrix minor =
      erase_rows_cols(mu, {v.unbounded_cell.row}, {v.unbounded_cell.col});
  if (!diagonal_totally_nonconstant(minor, v.diagonal)) return false;
  if (v.full_length) return v.diagonal.size() == minor.rows();
  if (v.diagonal.size() >= minor.rows()) return false;
  return v.detc_value != 0 &&
         detc(complementary(minor, v.diagonal)) == v.detc_value;
}

bool verify_c2(const GIMatrix& mu, const Condition2Violation& v) {
  const GIMatrix pinned = pin_half_bounded(zero_unbounded(mu));
  if (v.left != to_rmatrix(take_left(pinned))) return false;
  try {
    if (!is_even_type(pinned, to_gimatrix(v.vertex))) return false;
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (det(v.vertex) != v.det_vertex || det(v.left) != v.det_left) return false;
  return sign_of(v.det_vertex) * sign_of(v.det_left) <= 0;
}

bool verify_c3(const GIMatrix& mu, const Condition3Violation& v) {
  const GIMatrix zeroed = zero_unbounded(mu);
  try {
    if (!is_even_type(zeroed, v.vertex)) return false;
    check_tuple(mu, v.tuple.cells);
  } catch (const std::invalid_argument&) {
    return false;
  }
  const RMatrix left = to_rmatrix(take_left(pin_half_bounded(zeroed)));
  const Rational minor_det =
      det(erase_rows_cols(to_rmatrix(pin_half_bounded(v.vertex)),
                          tuple_rows(v.tuple.cells), tuple_cols(v.tuple.cells)));
  const Rational value = sign_exponent(mu, v.tuple) * det(left) * minor_det;
  return value == v.value && value < 0;
}

}  // namespace

bool verify_certificate(const GIMatrix& mu, const Certificate& certificate) {
  return std::visit(
      [&](const auto& cert) -> bool {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, AllConditionsHold>) {
          return full_rank_general(mu).full_rank;
        } else if constexpr (std::is_same_v<T, Condition1Violation>) {
          return verify_c1(mu, cert);
        } else if constexpr (std::is_same_v<T, Condition2Violation>) {
          return verify_c2(mu, cert);
        } else if constexpr (std::is_same_v<T, Condition3Violation>) {
          return verify_c3(mu, cert);
        } else {
          return contains(mu, cert.witness) && det(cert.witness) == 0;
        }
      },
      certificate);
}

}  // namespace gim
