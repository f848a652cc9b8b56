#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gim/genfull.hpp"
#include "gim/oracle.hpp"
#include "gim/rohn.hpp"
#include "test_support.hpp"

using namespace gim;
using namespace gimtest;

TEST_CASE("sign_exponent") {
  // Single left-bounded cell at (1,1): (-1)^(1+1+0) = +1.
  GIMatrix m1(2, 2, GInterval::constant(0));
  m1(0, 0) = GInterval::left_bounded(1);
  CHECK(sign_exponent(m1, {{{0, 0}}}) == 1);

  // Single right-bounded cell at (1,2): (-1)^(1+2+1) = +1.
  GIMatrix m2(2, 2, GInterval::constant(0));
  m2(0, 1) = GInterval::right_bounded(1);
  CHECK(sign_exponent(m2, {{{0, 1}}}) == 1);
  // Left-bounded at the same position flips: (-1)^(1+2) = -1.
  GIMatrix m3(2, 2, GInterval::constant(0));
  m3(0, 1) = GInterval::left_bounded(1);
  CHECK(sign_exponent(m3, {{{0, 1}}}) == -1);

  // Cells ((1,1),(2,2)) both left-bounded: 1+1+1+1+0 -> +1.
  GIMatrix m4(2, 2, GInterval::constant(0));
  m4(0, 0) = GInterval::left_bounded(0);
  m4(1, 1) = GInterval::left_bounded(0);
  CHECK(sign_exponent(m4, {{{0, 0}, {1, 1}}}) == 1);

  CHECK_THROWS_AS(sign_exponent(m4, {{{0, 0}, {0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(sign_exponent(m4, {{{0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(sign_exponent(m4, {{{5, 0}}}), std::invalid_argument);
}

TEST_CASE("monotone_box_nonneg") {
  // p = x on [0, inf): nonnegative.
  const MultilinearFn id = [](const std::vector<Rational>& v) -> Rational {
    return v[0];
  };
  CHECK(monotone_box_nonneg(id, {Rational(0)}, {0}));

  // p = 1 - x fails: derivative is -1.
  const MultilinearFn one_minus =
      [](const std::vector<Rational>& v) -> Rational {
        return Rational(1) - v[0];
      };
  CHECK_FALSE(monotone_box_nonneg(one_minus, {Rational(0)}, {0}));
  // With no free direction it is just the point check.
  CHECK(monotone_box_nonneg(one_minus, {Rational(0)}, {}));

  // p = x*y - 1 from (1,1): zero at the corner, derivatives nonnegative.
  const MultilinearFn xy_minus_one =
      [](const std::vector<Rational>& v) -> Rational {
        return v[0] * v[1] - 1;
      };
  CHECK(monotone_box_nonneg(xy_minus_one, {Rational(1), Rational(1)}, {0, 1}));
  CHECK_FALSE(
      monotone_box_nonneg(xy_minus_one, {Rational(0), Rational(0)}, {0, 1}));
}

TEST_CASE("split_unbounded") {
  const GIMatrix c(2, 2, GInterval::constant(1));
  const auto none = split_unbounded(c);
  CHECK(none.zeroed == c);
  CHECK(none.cells.empty());

  const auto alpha = split_unbounded(alpha_matrix());
  REQUIRE(alpha.cells.size() == 1);
  CHECK(alpha.cells[0] == Cell{0, 0});
  CHECK(alpha.zeroed(0, 0) == GInterval::constant(0));

  const auto delta = split_unbounded(delta_matrix());
  REQUIRE(delta.cells.size() == 2);
  CHECK(delta.cells[0] == Cell{0, 0});
  CHECK(delta.cells[1] == Cell{0, 3});
}

TEST_CASE("full_rank_half_bounded on 1x1 half-lines") {
  GIMatrix good(1, 1, GInterval::left_bounded(1));
  CHECK(full_rank_half_bounded(good));  // [1,inf) misses 0

  GIMatrix bad(1, 1, GInterval::left_bounded(-1));
  CHECK_FALSE(full_rank_half_bounded(bad));  // [-1,inf) contains 0

  GIMatrix zero_edge(1, 1, GInterval::left_bounded(0));
  CHECK_FALSE(full_rank_half_bounded(zero_edge));  // pinned det is 0

  GIMatrix consts(2, 2, GInterval::constant(0));
  consts(0, 0) = GInterval::constant(1);
  consts(1, 1) = GInterval::constant(1);
  CHECK(full_rank_half_bounded(consts));

  CHECK_THROWS_AS(full_rank_half_bounded(GIMatrix(1, 1, GInterval::bounded(0, 1))),
                  std::invalid_argument);
  CHECK_THROWS_AS(full_rank_half_bounded(GIMatrix(1, 1, GInterval::unbounded())),
                  std::invalid_argument);
}

TEST_CASE("full_rank_half_bounded catches coupled half-lines") {
  // [[1, [0,inf)], [[0,inf), 1]] contains [[1,1],[1,1]].
  GIMatrix coupled(2, 2, GInterval::constant(1));
  coupled(0, 1) = GInterval::left_bounded(0);
  coupled(1, 0) = GInterval::left_bounded(0);
  CHECK_FALSE(full_rank_half_bounded(coupled));

  // Flip the coupling so the product term can only help.
  GIMatrix helped(2, 2, GInterval::constant(1));
  helped(0, 1) = GInterval::right_bounded(0);
  helped(1, 0) = GInterval::left_bounded(0);
  CHECK(full_rank_half_bounded(helped));
}

TEST_CASE("half-bounded criterion agrees with the multilinear recursion") {
  // Second route to the same predicate: the determinant as a multilinear
  // function of the half-line offsets must keep the sign of det(pinned)
  // on the whole nonnegative orthant.
  Rng rng(4242);
  auto monotone_route = [](const GIMatrix& rho) {
    const auto cells = half_bounded_cells(rho);
    const RMatrix pinned = to_rmatrix(pin_half_bounded(rho));
    const Rational d0 = det(pinned);
    if (d0 == 0) return false;
    const int s = sign_of(d0);
    const MultilinearFn f = [&rho, &cells,
                             s](const std::vector<Rational>& t) -> Rational {
      RMatrix a = to_rmatrix(pin_half_bounded(rho));
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if (rho(cells[k].row, cells[k].col).is_left_bounded())
          a(cells[k].row, cells[k].col) += t[k];
        else
          a(cells[k].row, cells[k].col) -= t[k];
      }
      return s * det(a);
    };
    std::vector<Rational> base(cells.size(), Rational(0));
    std::vector<std::size_t> dirs(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) dirs[k] = k;
    return monotone_box_nonneg(f, base, dirs);
  };

  for (int iter = 0; iter < 80; ++iter) {
    const std::size_t p = 1 + rng.below(3);
    GIMatrix rho(p, p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) {
        const Rational v = random_rational(rng);
        switch (rng.below(4)) {
          case 0:
            rho(i, j) = GInterval::left_bounded(v);
            break;
          case 1:
            rho(i, j) = GInterval::right_bounded(v);
            break;
          default:
            rho(i, j) = GInterval::constant(v);
        }
      }
    CHECK(full_rank_half_bounded(rho) == monotone_route(rho));
  }
}

TEST_CASE("full rank of 1x1 matrices, all entry shapes") {
  auto verdict_of = [](const GInterval& e) {
    return full_rank_general(GIMatrix(1, 1, e));
  };

  CHECK(verdict_of(GInterval::constant(5)).full_rank);
  CHECK_FALSE(verdict_of(GInterval::constant(0)).full_rank);
  CHECK(verdict_of(GInterval::bounded(1, 2)).full_rank);
  CHECK_FALSE(verdict_of(GInterval::bounded(-1, 1)).full_rank);
  CHECK(verdict_of(GInterval::left_bounded(1)).full_rank);
  CHECK(verdict_of(GInterval::right_bounded(-1)).full_rank);

  // [-1,inf) contains 0: rejected by the half-bounded cofactor condition.
  const Verdict v = verdict_of(GInterval::left_bounded(-1));
  CHECK_FALSE(v.full_rank);
  REQUIRE(std::holds_alternative<Condition3Violation>(v.certificate));
  const auto& c3 = std::get<Condition3Violation>(v.certificate);
  CHECK(c3.value < 0);
  CHECK(verify_certificate(GIMatrix(1, 1, GInterval::left_bounded(-1)),
                           v.certificate));

  // (-inf,inf) fails with the empty diagonal of the 0x0 minor.
  const Verdict u = verdict_of(GInterval::unbounded());
  CHECK_FALSE(u.full_rank);
  REQUIRE(std::holds_alternative<Condition1Violation>(u.certificate));
  CHECK(std::get<Condition1Violation>(u.certificate).full_length);
  CHECK(std::get<Condition1Violation>(u.certificate).diagonal.empty());
  CHECK(verify_certificate(GIMatrix(1, 1, GInterval::unbounded()),
                           u.certificate));
}

TEST_CASE("full_rank_no_unbounded") {
  const GIMatrix c = to_gimatrix(RMatrix::from_rows(
      {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}));
  CHECK(full_rank_no_unbounded(c));

  CHECK_FALSE(full_rank_no_unbounded(GIMatrix(1, 1, GInterval::bounded(-1, 1))));

  // The second worked example with its unbounded cell zeroed.
  const GIMatrix beta_zeroed = zero_unbounded(beta_matrix());
  CHECK(full_rank_no_unbounded(beta_zeroed));

  CHECK_THROWS_AS(full_rank_no_unbounded(GIMatrix(1, 1, GInterval::unbounded())),
                  std::invalid_argument);
}

TEST_CASE("worked example 1: vertex sign conflict") {
  const Verdict v = full_rank_general(alpha_matrix());
  CHECK_FALSE(v.full_rank);
  REQUIRE(std::holds_alternative<Condition2Violation>(v.certificate));
  const auto& c2 = std::get<Condition2Violation>(v.certificate);
  CHECK(c2.left == alpha_left_matrix());
  CHECK(c2.det_left == -88);
  CHECK(sign_of(c2.det_vertex) * sign_of(c2.det_left) <= 0);
  CHECK(verify_certificate(alpha_matrix(), v.certificate));
}

TEST_CASE("worked example 2: full rank") {
  const Verdict v = full_rank_general(beta_matrix());
  CHECK(v.full_rank);
  CHECK(std::holds_alternative<AllConditionsHold>(v.certificate));
  CHECK(verify_certificate(beta_matrix(), v.certificate));
}

TEST_CASE("worked example 3: unbounded-minor violation") {
  const Verdict v = full_rank_general(delta_matrix());
  CHECK_FALSE(v.full_rank);
  REQUIRE(std::holds_alternative<Condition1Violation>(v.certificate));
  const auto& c1 = std::get<Condition1Violation>(v.certificate);
  CHECK(delta_matrix()(c1.unbounded_cell.row, c1.unbounded_cell.col)
            .is_unbounded());
  CHECK(verify_certificate(delta_matrix(), v.certificate));
}

TEST_CASE("tampered certificates do not verify") {
  const Verdict v = full_rank_general(alpha_matrix());
  auto c2 = std::get<Condition2Violation>(v.certificate);
  c2.det_left = -c2.det_left;
  CHECK_FALSE(verify_certificate(alpha_matrix(), Certificate(c2)));

  const Verdict d = full_rank_general(delta_matrix());
  auto c1 = std::get<Condition1Violation>(d.certificate);
  c1.detc_value += 1;
  CHECK_FALSE(verify_certificate(delta_matrix(), Certificate(c1)));

  // A singular witness must actually be contained and singular.
  CHECK(verify_certificate(alpha_matrix(),
                           SingularWitness{alpha_singular_matrix()}));
  RMatrix escaped = alpha_singular_matrix();
  escaped(0, 1) = 0;  // leaves the [1,inf) cell
  CHECK_FALSE(verify_certificate(alpha_matrix(), SingularWitness{escaped}));
  RMatrix regular = alpha_singular_matrix();
  regular(3, 1) = 2;  // back inside [-1,2], but det becomes 32
  CHECK_FALSE(verify_certificate(alpha_matrix(), SingularWitness{regular}));
}

TEST_CASE("bounded-only inputs match the classical tests") {
  Rng rng(888);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t p = 1 + rng.below(3);
    const GIMatrix mu = random_classical_matrix(rng, p, p);
    const Verdict v = full_rank_general(mu);
    CHECK(v.full_rank == rohn_full_rank_vertex(mu));
    const auto [lo, hi] = vertex_det_range(mu);
    CHECK(v.full_rank == !(lo <= 0 && 0 <= hi));
  }
}

TEST_CASE("constant/half-bounded inputs match the dedicated test") {
  Rng rng(889);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t p = 1 + rng.below(3);
    GIMatrix mu(p, p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) {
        switch (rng.below(4)) {
          case 0:
            mu(i, j) = GInterval::left_bounded(random_rational(rng));
            break;
          case 1:
            mu(i, j) = GInterval::right_bounded(random_rational(rng));
            break;
          default:
            mu(i, j) = GInterval::constant(random_rational(rng));
        }
      }
    CHECK(full_rank_general(mu).full_rank == full_rank_half_bounded(mu));
  }
}

TEST_CASE("signed cofactor value is tuple-order invariant") {
  Rng rng(890);
  for (int iter = 0; iter < 40; ++iter) {
    // Constant 4x4 with some half-bounded cells sprinkled in.
    GIMatrix mu(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const Rational v = random_rational(rng);
        switch (rng.below(5)) {
          case 0:
            mu(i, j) = GInterval::left_bounded(v);
            break;
          case 1:
            mu(i, j) = GInterval::right_bounded(v);
            break;
          default:
            mu(i, j) = GInterval::constant(v);
        }
      }
    const RMatrix pinned = to_rmatrix(pin_half_bounded(mu));
    const auto cells = half_bounded_cells(mu);

    // Every tuple of size <= 3 with distinct rows and columns.
    std::vector<std::vector<Cell>> tuples;
    for (std::size_t a = 0; a < cells.size(); ++a) {
      tuples.push_back({cells[a]});
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        if (cells[a].row == cells[b].row || cells[a].col == cells[b].col)
          continue;
        tuples.push_back({cells[a], cells[b]});
        for (std::size_t c = b + 1; c < cells.size(); ++c) {
          if (cells[c].row == cells[a].row || cells[c].row == cells[b].row ||
              cells[c].col == cells[a].col || cells[c].col == cells[b].col)
            continue;
          tuples.push_back({cells[a], cells[b], cells[c]});
        }
      }
    }

    for (const auto& tuple : tuples) {
      std::vector<Cell> order = tuple;
      std::sort(order.begin(), order.end(),
                [](const Cell& l, const Cell& r) {
                  return l.row < r.row || (l.row == r.row && l.col < r.col);
                });
      std::optional<Rational> expected;
      do {
        std::vector<std::size_t> rows, cols;
        for (const Cell& c : order) {
          rows.push_back(c.row);
          cols.push_back(c.col);
        }
        const Rational value = sign_exponent(mu, {order}) *
                               det(erase_rows_cols(pinned, rows, cols));
        if (!expected)
          expected = value;
        else
          CHECK(value == *expected);
      } while (std::next_permutation(
          order.begin(), order.end(), [](const Cell& l, const Cell& r) {
            return l.row < r.row || (l.row == r.row && l.col < r.col);
          }));
    }
  }
}

TEST_CASE("direct decision agrees with the split/reduce route") {
  // Independent evaluation path: peel off the unbounded cells (each minor
  // must have deficient maximal rank), then run the vertex-based test on
  // the zeroed matrix. Must match the three-condition decision everywhere.
  Rng rng(893);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t p = 1 + rng.below(3);
    const GIMatrix mu = random_general_matrix(rng, p, p);

    const auto split = split_unbounded(mu);
    bool by_route = full_rank_no_unbounded(split.zeroed);
    for (const Cell& cell : split.cells) {
      if (!by_route) break;
      by_route = max_rank_lt_p(erase_rows_cols(mu, {cell.row}, {cell.col}));
    }
    CHECK(full_rank_general(mu).full_rank == by_route);
  }
}

TEST_CASE("decision is invariant under row and column permutations") {
  Rng rng(891);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t p = 1 + rng.below(3);
    const GIMatrix mu = random_general_matrix(rng, p, p);

    std::vector<std::size_t> sigma(p), tau(p);
    for (std::size_t i = 0; i < p; ++i) sigma[i] = tau[i] = i;
    for (std::size_t i = p; i > 1; --i) {
      std::swap(sigma[i - 1], sigma[rng.below(i)]);
      std::swap(tau[i - 1], tau[rng.below(i)]);
    }
    GIMatrix permuted(p, p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j)
        permuted(i, j) = mu(sigma[i], tau[j]);

    CHECK(full_rank_general(mu).full_rank ==
          full_rank_general(permuted).full_rank);
  }
}

TEST_CASE("negative verdicts respect singular witnesses") {
  Rng rng(892);
  for (int iter = 0; iter < 80; ++iter) {
    const std::size_t p = 1 + rng.below(3);
    const GIMatrix mu = random_general_matrix(rng, p, p);
    const Verdict v = full_rank_general(mu);
    const auto w = singular_witness(mu, SampleConfig{iter * 7919ULL, 400, 50});
    if (w) {
      CHECK(contains(mu, *w));
      CHECK(det(*w) == 0);
      CHECK_FALSE(v.full_rank);
    }
    if (v.full_rank) CHECK_FALSE(w.has_value());
  }
}
