#ifndef GIM_GENFULL_HPP
#define GIM_GENFULL_HPP

#include <functional>
#include <optional>
#include <variant>

#include "gim/detc.hpp"
#include "gim/linalg.hpp"
#include "gim/matrix.hpp"

namespace gim {

/*
 * Full-rank decision for square general closed interval matrices. The
 * decision procedure evaluates three conditions in order and returns the
 * first violation together with a machine-checkable certificate:
 *
 *   (1) for every (-inf,+inf) cell (i,j), the minor obtained by deleting row
 *       i and column j must have maximal rank < p-1 (no totally nonconstant
 *       pg-diagonal of full length, and every shorter one has a
 *       complementary matrix with detc 0);
 *   (2) with all unbounded cells zeroed and all half-bounded cells pinned to
 *       their finite endpoints, every even-type vertex completion must have
 *       a determinant of the same strict sign as the all-lower-endpoint
 *       completion L;
 *   (3) for every even-type vertex matrix of the zeroed matrix and every
 *       tuple of half-bounded cells on distinct rows and columns, a signed
 *       cofactor product against det(L) must be >= 0.
 */

/// An ordered tuple of half-bounded cells with pairwise distinct rows and
/// pairwise distinct columns.
struct HalfBoundedTuple {
  std::vector<Cell> cells;
};

/// Parity sign (-1)^(i1+j1 + sum_{t>=2}(i~t + j~t) + chi) of a tuple, where
/// i~t / j~t are the 1-based positions of cell t after deleting the rows and
/// columns of the earlier cells, and chi counts the right-bounded entries.
/// Throws std::invalid_argument if the tuple repeats a row or column, leaves
/// the matrix, or touches a cell that is not half-bounded.
int sign_exponent(const GIMatrix& mu, const HalfBoundedTuple& tuple);

/// Evaluator of a polynomial of degree <= 1 in every variable.
using MultilinearFn = std::function<Rational(const std::vector<Rational>&)>;

/// True iff f >= 0 on base + (nonnegative orthant spanned by free_dirs),
/// decided by the multilinear recursion: f(base) >= 0 and every partial
/// derivative in a free direction is >= 0 on the same region.
bool monotone_box_nonneg(const MultilinearFn& f,
                         const std::vector<Rational>& base,
                         const std::vector<std::size_t>& free_dirs);

struct UnboundedSplit {
  GIMatrix zeroed;          // unbounded entries replaced by 0
  std::vector<Cell> cells;  // positions that were (-inf,+inf), row-major
};

/// Split off the unbounded entries: mu is full-rank iff the zeroed matrix is
/// full-rank and, for every listed cell, the complementary minor of mu has
/// maximal rank < p-1.
UnboundedSplit split_unbounded(const GIMatrix& mu);

/// Full-rank test for a square matrix with no unbounded entries: every
/// even-type vertex matrix must be full-rank (as a constant/half-bounded
/// matrix) with pinned determinant of the same strict sign as the
/// all-lower-endpoint completion. Throws on unbounded entries.
bool full_rank_no_unbounded(const GIMatrix& nu);

/// Full-rank test for a square matrix with only constant or half-bounded
/// entries: det of the pinned matrix is nonzero and every signed cofactor
/// product over tuples of half-bounded cells is >= 0. Throws on bounded or
/// unbounded entries.
bool full_rank_half_bounded(const GIMatrix& rho);

// ---------------------------------------------------------------------------
// Verdicts and certificates

struct AllConditionsHold {};

/// Condition (1) evidence: an unbounded cell whose complementary minor
/// admits a maximal-rank witness. `diagonal` lives in minor coordinates.
struct Condition1Violation {
  Cell unbounded_cell;
  PgDiagonal diagonal;
  bool full_length = false;  // diagonal spans the whole minor
  Rational detc_value;       // detc of its complementary (when !full_length)
};

/// Condition (2) evidence: two constant completions whose determinants fail
/// to share one strict sign.
struct Condition2Violation {
  RMatrix vertex;  // an even-type vertex completion
  RMatrix left;    // the all-lower-endpoint completion L
  Rational det_vertex;
  Rational det_left;
};

/// Condition (3) evidence: an even-type vertex matrix, a tuple of
/// half-bounded cells and the signed product that came out negative.
struct Condition3Violation {
  GIMatrix vertex;
  HalfBoundedTuple tuple;
  Rational value;
};

/// A contained real matrix with determinant exactly zero.
struct SingularWitness {
  RMatrix witness;
};

using Certificate =
    std::variant<AllConditionsHold, Condition1Violation, Condition2Violation,
                 Condition3Violation, SingularWitness>;

struct Verdict {
  bool full_rank = false;
  Certificate certificate;
};

/// Decide full rank for a square general closed interval matrix. Conditions
/// are evaluated in order (1), (2), (3); all inner enumerations run in a
/// fixed order (cells row-major, diagonals and tuples lexicographic, vertex
/// selectors ascending), so the reported witness is deterministic.
Verdict full_rank_general(const GIMatrix& mu);

/// Independently re-check a certificate against mu: violations must
/// reproduce their defect, AllConditionsHold must match a fresh evaluation.
bool verify_certificate(const GIMatrix& mu, const Certificate& certificate);

}  // namespace gim

#endif  // GIM_GENFULL_HPP
