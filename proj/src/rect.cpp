#include "gim/rect.hpp"

#include <stdexcept>

#include "gim/linalg.hpp"
#include "gim/rohn.hpp"
#include "gim/simplex.hpp"

namespace gim {

namespace {

// Row-by-row completion with A x = 0, built from a solution of
// |C x| <= Delta |x|: subtract from row i of C a perturbation t_i with
// |t_ij| <= Delta_ij and t_i . x = C_i . x (proportional scaling of
// Delta_i against |x|).
RMatrix materialize_completion(const RMatrix& c, const RMatrix& delta,
                               const std::vector<Rational>& x) {
  const std::size_t p = c.rows(), q = c.cols();
  RMatrix a(p, q);
  for (std::size_t i = 0; i < p; ++i) {
    Rational cx = 0, dx = 0;
    for (std::size_t j = 0; j < q; ++j) {
      cx += c(i, j) * x[j];
      dx += delta(i, j) * rational_abs(x[j]);
    }
    if (dx == 0) {
      // |C_i x| <= 0 forces C_i x = 0; the center row already annihilates x.
      for (std::size_t j = 0; j < q; ++j) a(i, j) = c(i, j);
      continue;
    }
    const Rational scale = cx / dx;
    for (std::size_t j = 0; j < q; ++j)
      a(i, j) = c(i, j) - scale * delta(i, j) * sign_of(x[j]);
  }
  return a;
}

}  // namespace

OrthantSystem orthant_system(const GIMatrix& mu, const std::vector<int>& signs) {
  if (signs.size() != mu.cols())
    throw std::invalid_argument("orthant_system: one sign per column required");
  const std::size_t p = mu.rows(), q = mu.cols();
  const RMatrix c = center(mu), delta = radius(mu);

  OrthantSystem sys;
  sys.signs = signs;
  sys.a_ub = RMatrix(2 * p, q);
  sys.b_ub.assign(2 * p, Rational(0));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      sys.a_ub(i, j) = c(i, j) * signs[j] - delta(i, j);
      sys.a_ub(p + i, j) = -c(i, j) * signs[j] - delta(i, j);
    }
  sys.a_eq = RMatrix(1, q, Rational(1));
  sys.b_eq = {Rational(1)};
  return sys;
}

RectResult rect_full_rank(const GIMatrix& mu) {
  if (!is_classical(mu))
    throw std::invalid_argument("rect_full_rank: entry is half-bounded or unbounded");
  if (mu.empty()) return {true, std::nullopt};
  // Full rank is min{p,q} and transposition preserves it; keep p >= q.
  const GIMatrix work = mu.rows() >= mu.cols() ? mu : transpose(mu);
  const std::size_t q = work.cols();
  if (q > 63)
    throw std::invalid_argument("rect_full_rank: dimension too large");
  const RMatrix c = center(work), delta = radius(work);

  // s and -s describe opposite solutions of the same homogeneous system, so
  // s[0] stays +1.
  std::vector<int> s(q, 1);
  const std::uint64_t s_count = 1ULL << (q - 1);
  for (std::uint64_t sb = 0; sb < s_count; ++sb) {
    for (std::size_t j = 1; j < q; ++j) s[j] = (sb >> (j - 1)) & 1 ? -1 : 1;

    const OrthantSystem sys = orthant_system(work, s);
    const auto u = find_feasible(sys.a_ub, sys.b_ub, sys.a_eq, sys.b_eq);
    if (!u) continue;

    std::vector<Rational> x(q);
    for (std::size_t j = 0; j < q; ++j) x[j] = s[j] * (*u)[j];
    RMatrix a = materialize_completion(c, delta, x);

    // The witness is checked before it leaves the module.
    bool nonzero = false;
    for (const Rational& v : x) nonzero = nonzero || v != 0;
    if (!nonzero || !contains(work, a))
      throw std::logic_error("rect_full_rank: witness construction failed");
    for (const Rational& v : mat_vec(a, x))
      if (v != 0)
        throw std::logic_error("rect_full_rank: witness does not annihilate x");
    return {false, RectWitness{std::move(x), std::move(a)}};
  }
  return {true, std::nullopt};
}

}  // namespace gim
