#include "gim/detc.hpp"

#include <algorithm>
#include <numeric>

namespace gim {

namespace {

// Permutation sum over constant entries only, built row by row. Parity is
// tracked incrementally: assigning column c at row r adds one inversion for
// every earlier row already holding a larger column.
void detc_rec(const GIMatrix& nu, std::size_t row,
              std::vector<std::size_t>& chosen, std::vector<bool>& used,
              int parity, const Rational& partial, Rational& acc) {
  const std::size_t p = nu.rows();
  if (row == p) {
    acc += parity > 0 ? partial : -partial;
    return;
  }
  for (std::size_t c = 0; c < p; ++c) {
    if (used[c] || !nu(row, c).is_constant()) continue;
    int inversions = 0;
    for (std::size_t r = 0; r < row; ++r)
      if (chosen[r] > c) ++inversions;
    used[c] = true;
    chosen.push_back(c);
    detc_rec(nu, row + 1, chosen, used, (inversions % 2 == 0) ? parity : -parity,
             partial * nu(row, c).value(), acc);
    chosen.pop_back();
    used[c] = false;
  }
}

bool diagonals_rec(const GIMatrix& nu, std::size_t k, std::size_t next_row,
                   PgDiagonal& current, std::vector<bool>& used_cols,
                   const std::function<bool(const PgDiagonal&)>& visit) {
  if (current.size() == k) return visit(current);
  const std::size_t p = nu.rows();
  const std::size_t remaining = k - current.size();
  for (std::size_t r = next_row; r + remaining <= p; ++r) {
    for (std::size_t c = 0; c < nu.cols(); ++c) {
      if (used_cols[c] || !nu(r, c).is_nonconstant()) continue;
      used_cols[c] = true;
      current.push_back({r, c});
      const bool keep_going =
          diagonals_rec(nu, k, r + 1, current, used_cols, visit);
      current.pop_back();
      used_cols[c] = false;
      if (!keep_going) return false;
    }
  }
  return true;
}

void check_diagonal(const GIMatrix& nu, const PgDiagonal& d) {
  std::vector<bool> row_seen(nu.rows(), false), col_seen(nu.cols(), false);
  for (const Cell& cell : d) {
    if (cell.row >= nu.rows() || cell.col >= nu.cols())
      throw std::invalid_argument("pg-diagonal cell out of range");
    if (row_seen[cell.row] || col_seen[cell.col])
      throw std::invalid_argument("pg-diagonal repeats a row or column");
    row_seen[cell.row] = true;
    col_seen[cell.col] = true;
  }
}

}  // namespace

Rational detc(const GIMatrix& nu) {
  if (!nu.is_square()) throw std::invalid_argument("detc: matrix not square");
  if (nu.rows() == 0) return 1;  // empty product over the single permutation
  Rational acc = 0;
  std::vector<std::size_t> chosen;
  std::vector<bool> used(nu.rows(), false);
  detc_rec(nu, 0, chosen, used, 1, Rational(1), acc);
  return acc;
}

GIMatrix complementary(const GIMatrix& nu, const PgDiagonal& d) {
  check_diagonal(nu, d);
  std::vector<std::size_t> rows, cols;
  for (const Cell& cell : d) {
    rows.push_back(cell.row);
    cols.push_back(cell.col);
  }
  return erase_rows_cols(nu, rows, cols);
}

bool for_each_totally_nonconstant_diagonal(
    const GIMatrix& nu, std::size_t k,
    const std::function<bool(const PgDiagonal&)>& visit) {
  if (!nu.is_square())
    throw std::invalid_argument("diagonal enumeration: matrix not square");
  if (k > nu.rows()) return true;
  PgDiagonal current;
  std::vector<bool> used_cols(nu.cols(), false);
  return diagonals_rec(nu, k, 0, current, used_cols, visit);
}

std::vector<PgDiagonal> totally_nonconstant_diagonals(const GIMatrix& nu,
                                                      std::size_t k) {
  std::vector<PgDiagonal> out;
  for_each_totally_nonconstant_diagonal(nu, k, [&](const PgDiagonal& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

bool max_rank_lt_p(const GIMatrix& nu) {
  if (!nu.is_square())
    throw std::invalid_argument("max_rank_lt_p: matrix not square");
  const std::size_t p = nu.rows();
  // (1) no totally nonconstant pg-diagonal of full length p
  bool found = !for_each_totally_nonconstant_diagonal(
      nu, p, [](const PgDiagonal&) { return false; });
  if (found) return false;
  // (2) every shorter totally nonconstant pg-diagonal has detc 0
  for (std::size_t k = 0; k < p; ++k) {
    const bool all_zero =
        for_each_totally_nonconstant_diagonal(nu, k, [&](const PgDiagonal& d) {
          return detc(complementary(nu, d)) == 0;
        });
    if (!all_zero) return false;
  }
  return true;
}

namespace {

// Does this square submatrix witness rank >= t? Either a full-length totally
// nonconstant pg-diagonal, or a shorter one with nonzero complementary detc.
bool square_witnesses_full(const GIMatrix& sub) {
  const std::size_t t = sub.rows();
  if (!for_each_totally_nonconstant_diagonal(
          sub, t, [](const PgDiagonal&) { return false; }))
    return true;
  for (std::size_t k = 0; k < t; ++k) {
    if (!for_each_totally_nonconstant_diagonal(sub, k, [&](const PgDiagonal& d) {
          return detc(complementary(sub, d)) == 0;
        }))
      return true;
  }
  return false;
}

bool subsets_rec(std::size_t n, std::size_t t, std::size_t start,
                 std::vector<std::size_t>& current,
                 const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (current.size() == t) return f(current);
  for (std::size_t i = start; i + (t - current.size()) <= n; ++i) {
    current.push_back(i);
    if (!subsets_rec(n, t, i + 1, current, f)) return false;
    current.pop_back();
  }
  return true;
}

bool for_each_subset(std::size_t n, std::size_t t,
                     const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> current;
  return subsets_rec(n, t, 0, current, f);
}

}  // namespace

std::size_t max_rank(const GIMatrix& mu) {
  const std::size_t bound = std::min(mu.rows(), mu.cols());
  for (std::size_t t = bound; t >= 1; --t) {
    bool witnessed = false;
    for_each_subset(mu.rows(), t, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(
          mu.cols(), t, [&](const std::vector<std::size_t>& cols) {
            if (square_witnesses_full(submatrix(mu, rows, cols))) {
              witnessed = true;
              return false;
            }
            return true;
          });
    });
    if (witnessed) return t;
  }
  return 0;
}

}  // namespace gim
