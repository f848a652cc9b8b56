#include "gim/simplex.hpp"

#include <stdexcept>

namespace gim {

namespace {

// Tableau with rows indexed 0..m-1, columns 0..n-1 plus RHS column n.
struct Tableau {
  std::size_t m = 0, n = 0;
  std::vector<std::vector<Rational>> row;  // m rows of n+1
  std::vector<Rational> cost;              // reduced costs, n+1 (last = -obj)
  std::vector<std::size_t> basis;          // basic variable per row

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = row[r][c];
    for (auto& v : row[r]) v /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || row[i][c] == 0) continue;
      const Rational f = row[i][c];
      for (std::size_t j = 0; j <= n; ++j) row[i][j] -= f * row[r][j];
    }
    if (cost[c] != 0) {
      const Rational f = cost[c];
      for (std::size_t j = 0; j <= n; ++j) cost[j] -= f * row[r][j];
    }
    basis[r] = c;
  }
};

}  // namespace

std::optional<std::vector<Rational>> find_feasible(
    const RMatrix& a_ub, const std::vector<Rational>& b_ub,
    const RMatrix& a_eq, const std::vector<Rational>& b_eq) {
  const std::size_t q = a_ub.empty() ? a_eq.cols() : a_ub.cols();
  if (!a_ub.empty() && b_ub.size() != a_ub.rows())
    throw std::invalid_argument("find_feasible: b_ub size");
  if (!a_eq.empty() && b_eq.size() != a_eq.rows())
    throw std::invalid_argument("find_feasible: b_eq size");
  if (!a_ub.empty() && !a_eq.empty() && a_ub.cols() != a_eq.cols())
    throw std::invalid_argument("find_feasible: column mismatch");

  const std::size_t m_ub = a_ub.empty() ? 0 : a_ub.rows();
  const std::size_t m_eq = a_eq.empty() ? 0 : a_eq.rows();
  const std::size_t m = m_ub + m_eq;

  // Columns: q structural, m_ub slacks, then one artificial per row that
  // needs one. Rows are sign-flipped up front so every RHS is >= 0.
  Tableau t;
  t.m = m;
  std::vector<int> flip(m, 1);
  std::vector<bool> needs_artificial(m, false);
  for (std::size_t i = 0; i < m_ub; ++i) {
    if (b_ub[i] < 0) flip[i] = -1;
    needs_artificial[i] = flip[i] < 0;  // flipped slack is -1, unusable basis
  }
  for (std::size_t i = 0; i < m_eq; ++i) {
    if (b_eq[i] < 0) flip[m_ub + i] = -1;
    needs_artificial[m_ub + i] = true;
  }
  std::size_t n_art = 0;
  for (bool b : needs_artificial) n_art += b ? 1 : 0;
  t.n = q + m_ub + n_art;
  t.row.assign(m, std::vector<Rational>(t.n + 1, Rational(0)));
  t.cost.assign(t.n + 1, Rational(0));
  t.basis.assign(m, 0);

  std::size_t next_art = q + m_ub;
  for (std::size_t i = 0; i < m; ++i) {
    const bool is_ub = i < m_ub;
    for (std::size_t j = 0; j < q; ++j) {
      const Rational& v = is_ub ? a_ub(i, j) : a_eq(i - m_ub, j);
      t.row[i][j] = flip[i] * v;
    }
    if (is_ub) t.row[i][q + i] = flip[i];
    t.row[i][t.n] = flip[i] * (is_ub ? b_ub[i] : b_eq[i - m_ub]);
    if (needs_artificial[i]) {
      t.row[i][next_art] = 1;
      t.basis[i] = next_art++;
    } else {
      t.basis[i] = q + i;  // slack
    }
  }

  // Phase one: minimize the sum of artificials. Reduced costs start as
  // c_j - sum of artificial rows' coefficients.
  for (std::size_t j = q + m_ub; j < t.n; ++j) t.cost[j] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (!needs_artificial[i]) continue;
    for (std::size_t j = 0; j <= t.n; ++j) t.cost[j] -= t.row[i][j];
  }

  // Bland's rule: smallest-index entering column, smallest-index basic
  // variable on ratio ties. Guarantees termination.
  for (;;) {
    std::size_t enter = t.n;
    for (std::size_t j = 0; j < t.n; ++j)
      if (t.cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == t.n) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.row[i][enter] <= 0) continue;
      const Rational ratio = t.row[i][t.n] / t.row[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m)
      throw std::logic_error("find_feasible: phase-one objective unbounded");
    t.pivot(leave, enter);
  }

  if (-t.cost[t.n] != 0) return std::nullopt;  // artificials can't reach 0

  std::vector<Rational> u(q, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] < q) u[t.basis[i]] = t.row[i][t.n];
  return u;
}

}  // namespace gim
