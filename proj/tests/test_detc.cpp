#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gim/detc.hpp"
#include "gim/linalg.hpp"
#include "gim/oracle.hpp"
#include "test_support.hpp"

using namespace gim;
using namespace gimtest;

namespace {

GIMatrix constant_square(std::initializer_list<std::initializer_list<int>> rows) {
  std::size_t n = rows.size();
  GIMatrix out(n, n);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (int v : row) out(i, j++) = GInterval::constant(v);
    ++i;
  }
  return out;
}

// Superset-wise widening of one entry, used for the monotonicity property.
GInterval widen(Rng& rng, const GInterval& e) {
  const Rational r = 1 + rng.below(3);
  switch (e.kind()) {
    case GInterval::Kind::Constant:
      switch (rng.below(4)) {
        case 0:
          return GInterval::bounded(e.value() - r, e.value() + r);
        case 1:
          return GInterval::left_bounded(e.value() - r);
        case 2:
          return GInterval::right_bounded(e.value() + r);
        default:
          return GInterval::unbounded();
      }
    case GInterval::Kind::Bounded:
      switch (rng.below(4)) {
        case 0:
          return GInterval::bounded(e.lower() - r, e.upper() + r);
        case 1:
          return GInterval::left_bounded(e.lower() - r);
        case 2:
          return GInterval::right_bounded(e.upper() + r);
        default:
          return GInterval::unbounded();
      }
    case GInterval::Kind::LeftBounded:
      return rng.below(2) ? GInterval::left_bounded(e.lower() - r)
                          : GInterval::unbounded();
    case GInterval::Kind::RightBounded:
      return rng.below(2) ? GInterval::right_bounded(e.upper() + r)
                          : GInterval::unbounded();
    default:
      return GInterval::unbounded();
  }
}

}  // namespace

TEST_CASE("detc on all-constant matrices is the determinant") {
  const GIMatrix m = constant_square({{2, 1, 0}, {4, -1, 3}, {0, 5, 2}});
  CHECK(detc(m) == det(to_rmatrix(m)));

  Rng rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t n = 1 + rng.below(4);
    GIMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        c(i, j) = GInterval::constant(random_rational(rng));
    CHECK(detc(c) == det(to_rmatrix(c)));
  }
}

TEST_CASE("detc is the empty sum when no permutation is all-constant") {
  GIMatrix m(3, 3, GInterval::bounded(0, 1));
  CHECK(detc(m) == 0);

  const GIMatrix two = GIMatrix::from_rows(
      {{GInterval::constant(1), GInterval::bounded(0, 1)},
       {GInterval::bounded(0, 1), GInterval::constant(3)}});
  // Only the identity permutation stays on constants: 1 * 3.
  CHECK(detc(two) == 3);

  CHECK_THROWS_AS(detc(GIMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("complementary matrix of a pg-diagonal") {
  const GIMatrix m = constant_square({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(complementary(m, {}) == m);

  const PgDiagonal full = {{0, 0}, {1, 1}, {2, 2}};
  CHECK(complementary(m, full).rows() == 0);

  const PgDiagonal one = {{0, 1}};
  const GIMatrix rest = complementary(m, one);
  CHECK(rest == constant_square({{4, 6}, {7, 9}}));

  CHECK_THROWS_AS(complementary(m, PgDiagonal{{0, 0}, {1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(complementary(m, PgDiagonal{{3, 0}}), std::invalid_argument);
}

TEST_CASE("totally nonconstant diagonal enumeration") {
  const GIMatrix c = constant_square({{1, 2}, {3, 4}});
  CHECK(totally_nonconstant_diagonals(c, 1).empty());
  CHECK(totally_nonconstant_diagonals(c, 2).empty());
  CHECK(totally_nonconstant_diagonals(c, 0).size() == 1);
  CHECK(totally_nonconstant_diagonals(c, 0).front().empty());

  for (std::size_t p = 1; p <= 4; ++p) {
    GIMatrix b(p, p, GInterval::bounded(0, 1));
    std::size_t factorial = 1;
    for (std::size_t i = 2; i <= p; ++i) factorial *= i;
    CHECK(totally_nonconstant_diagonals(b, p).size() == factorial);
  }

  // Early exit stops the walk.
  GIMatrix b3(3, 3, GInterval::bounded(0, 1));
  int seen = 0;
  const bool finished =
      for_each_totally_nonconstant_diagonal(b3, 2, [&](const PgDiagonal&) {
        return ++seen < 3;
      });
  CHECK_FALSE(finished);
  CHECK(seen == 3);
}

TEST_CASE("max_rank_lt_p") {
  CHECK_FALSE(max_rank_lt_p(constant_square({{1, 0}, {0, 1}})));
  CHECK(max_rank_lt_p(GIMatrix(3, 3, GInterval::constant(0))));

  // Minor of the third worked example: has a totally nonconstant
  // pg-diagonal whose complementary matrix has detc 12 != 0.
  const GIMatrix minor = erase_rows_cols(delta_matrix(), {0}, {0});
  CHECK_FALSE(max_rank_lt_p(minor));
  CHECK(detc(complementary(minor, PgDiagonal{{0, 0}})) == 12);
}

TEST_CASE("max_rank basics") {
  CHECK(max_rank(GIMatrix(3, 4, GInterval::constant(0))) == 0);
  CHECK(max_rank(constant_square({{1, 0}, {0, 1}})) == 2);
  CHECK(max_rank(GIMatrix(1, 1, GInterval::bounded(-1, 1))) == 1);
  CHECK(max_rank(GIMatrix(2, 3, GInterval::unbounded())) == 2);
}

TEST_CASE("max_rank on partial-matrix style instances") {
  // Free antidiagonal over a constant identity: completions reach rank 2.
  GIMatrix anti(2, 2, GInterval::constant(1));
  anti(0, 1) = GInterval::unbounded();
  anti(1, 0) = GInterval::unbounded();
  CHECK(max_rank(anti) == 2);

  // One free cell inside zeros: every completion has a zero column.
  GIMatrix pinned(2, 2, GInterval::constant(0));
  pinned(0, 1) = GInterval::unbounded();
  CHECK(max_rank(pinned) == 1);

  // Rank-1 frame: the free cell can complete the outer product, and the
  // nonzero complementary detc pushes the bound to 2.
  GIMatrix frame = GIMatrix::from_rows(
      {{GInterval::constant(1), GInterval::constant(2)},
       {GInterval::constant(2), GInterval::unbounded()}});
  CHECK(max_rank(frame) == 2);
  CHECK(detc(complementary(frame, PgDiagonal{{1, 1}})) == 1);
}

TEST_CASE("max_rank is consistent with max_rank_lt_p on square inputs") {
  Rng rng(42);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t p = 1 + rng.below(4);
    const GIMatrix mu = random_general_matrix(rng, p, p);
    CHECK((max_rank(mu) < p) == max_rank_lt_p(mu));
  }
}

TEST_CASE("max_rank never decreases under entry widening") {
  Rng rng(43);
  for (int iter = 0; iter < 120; ++iter) {
    const std::size_t p = 1 + rng.below(3), q = 1 + rng.below(3);
    GIMatrix mu = random_general_matrix(rng, p, q);
    const std::size_t before = max_rank(mu);
    const std::size_t i = rng.below(p), j = rng.below(q);
    mu(i, j) = widen(rng, mu(i, j));
    CHECK(max_rank(mu) >= before);
  }
}

TEST_CASE("sampled ranks stay below max_rank and reach it") {
  Rng rng(44);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t p = 3 + rng.below(2);
    const GIMatrix mu = random_general_matrix(rng, p, p);
    const std::size_t bound = max_rank(mu);
    const SampleConfig cfg{rng.next(), 1000, 1000};
    std::size_t best = 0;
    bool contiguous_ok = true;
    std::set<std::size_t> ranks;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const std::size_t r = rank(sample_completion(mu, cfg, t));
      ranks.insert(r);
      best = std::max(best, r);
      if (r > bound) contiguous_ok = false;  // would already be a failure
      if (best == bound && t > 50) break;
    }
    CHECK(best <= bound);
    CHECK(best == bound);  // generic completions reach the maximum
    // Achieved ranks together with the maximum form a contiguous range.
    ranks.insert(bound);
    for (std::size_t r = *ranks.begin(); r <= *ranks.rbegin(); ++r)
      if (!ranks.count(r)) contiguous_ok = false;
    CHECK(contiguous_ok);
  }
}
