#include "gim/matrix.hpp"

#include <algorithm>

namespace gim {

namespace {

// Normalize an index set: sorted, unique, all < limit.
std::vector<std::size_t> normalize_indices(const std::vector<std::size_t>& ix,
                                           std::size_t limit,
                                           const char* what) {
  std::vector<std::size_t> out = ix;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= limit)
    throw std::out_of_range(std::string(what) + " index " +
                            std::to_string(out.back()) + " out of range");
  return out;
}

template <typename T>
Grid<T> erase_impl(const Grid<T>& m, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  const auto dr = normalize_indices(rows, m.rows(), "row");
  const auto dc = normalize_indices(cols, m.cols(), "column");
  std::vector<std::size_t> keep_r, keep_c;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!std::binary_search(dr.begin(), dr.end(), i)) keep_r.push_back(i);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!std::binary_search(dc.begin(), dc.end(), j)) keep_c.push_back(j);
  if (keep_r.empty() || keep_c.empty()) return Grid<T>();
  Grid<T> out(keep_r.size(), keep_c.size());
  for (std::size_t i = 0; i < keep_r.size(); ++i)
    for (std::size_t j = 0; j < keep_c.size(); ++j)
      out(i, j) = m(keep_r[i], keep_c[j]);
  return out;
}

template <typename T>
Grid<T> transpose_impl(const Grid<T>& m) {
  Grid<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

GIMatrix map_entries(const GIMatrix& mu, GInterval (*f)(const GInterval&)) {
  GIMatrix out = mu;
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j) out(i, j) = f(mu(i, j));
  return out;
}

}  // namespace

bool contains(const GIMatrix& mu, const RMatrix& a) {
  if (mu.rows() != a.rows() || mu.cols() != a.cols())
    throw std::invalid_argument("contains: dimension mismatch");
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j)
      if (!mu(i, j).contains(a(i, j))) return false;
  return true;
}

GIMatrix zero_unbounded(const GIMatrix& mu) {
  return map_entries(mu, [](const GInterval& e) {
    return e.is_unbounded() ? GInterval::constant(0) : e;
  });
}

GIMatrix pin_half_bounded(const GIMatrix& mu) {
  return map_entries(mu, [](const GInterval& e) {
    return e.is_half_bounded() ? GInterval::constant(e.finite_endpoint()) : e;
  });
}

GIMatrix take_left(const GIMatrix& mu) {
  return map_entries(mu, [](const GInterval& e) {
    return e.is_bounded() ? GInterval::constant(e.lower()) : e;
  });
}

GIMatrix take_right(const GIMatrix& mu) {
  return map_entries(mu, [](const GInterval& e) {
    return e.is_bounded() ? GInterval::constant(e.upper()) : e;
  });
}

GIMatrix erase_rows_cols(const GIMatrix& mu, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
  return erase_impl(mu, rows, cols);
}

RMatrix erase_rows_cols(const RMatrix& a, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
  return erase_impl(a, rows, cols);
}

GIMatrix submatrix(const GIMatrix& mu, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) {
  if (rows.empty() || cols.empty()) return GIMatrix();
  GIMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(i, j) = mu.at(rows[i], cols[j]);
  return out;
}

GIMatrix transpose(const GIMatrix& mu) { return transpose_impl(mu); }
RMatrix transpose(const RMatrix& a) { return transpose_impl(a); }

bool is_classical(const GIMatrix& mu) {
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j)
      if (mu(i, j).is_half_bounded() || mu(i, j).is_unbounded()) return false;
  return true;
}

bool has_unbounded(const GIMatrix& mu) { return !unbounded_cells(mu).empty(); }

bool has_half_bounded(const GIMatrix& mu) {
  return !half_bounded_cells(mu).empty();
}

namespace {
template <typename Pred>
std::vector<Cell> cells_where(const GIMatrix& mu, Pred pred) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j)
      if (pred(mu(i, j))) out.push_back({i, j});
  return out;
}
}  // namespace

std::vector<Cell> unbounded_cells(const GIMatrix& mu) {
  return cells_where(mu, [](const GInterval& e) { return e.is_unbounded(); });
}

std::vector<Cell> half_bounded_cells(const GIMatrix& mu) {
  return cells_where(mu,
                     [](const GInterval& e) { return e.is_half_bounded(); });
}

std::vector<Cell> bounded_cells(const GIMatrix& mu) {
  return cells_where(mu, [](const GInterval& e) { return e.is_bounded(); });
}

RMatrix to_rmatrix(const GIMatrix& mu) {
  RMatrix out(mu.rows(), mu.cols());
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j) {
      if (!mu(i, j).is_constant())
        throw std::invalid_argument("to_rmatrix: nonconstant entry at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      out(i, j) = mu(i, j).value();
    }
  return out;
}

GIMatrix to_gimatrix(const RMatrix& a) {
  GIMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = GInterval::constant(a(i, j));
  return out;
}

}  // namespace gim
