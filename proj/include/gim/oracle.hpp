#ifndef GIM_ORACLE_HPP
#define GIM_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "gim/matrix.hpp"

namespace gim {

/*
 * Independent brute-force and randomized verification. The determinant is
 * affine in every single entry, so over a box of bounded entries its extrema
 * are attained at vertex completions; that makes the vertex range an exact
 * oracle for classical matrices. For half-bounded and unbounded entries only
 * randomized search (with exact per-cell root solving) is possible.
 */

struct SampleConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  Rational magnitude_cap = 1000;  // reach along unbounded directions

  bool operator==(const SampleConfig&) const = default;
};

/// (min, max) of det over all 2^k vertex completions of a square classical
/// interval matrix. Full rank iff 0 lies outside [min, max]. Throws on
/// half-bounded or unbounded entries.
std::pair<Rational, Rational> vertex_det_range(const GIMatrix& mu);

/// Randomized search for a contained singular matrix. Each trial samples a
/// completion on a rational grid, then solves det = 0 exactly along every
/// nonconstant cell (det is affine in the cell) and accepts a root that
/// stays inside the cell's set. Any returned witness satisfies
/// contains(mu, W) and det(W) == 0 exactly; absence of a witness proves
/// nothing. Identical configs yield identical outcomes; `threads` only
/// spreads the trial range.
std::optional<RMatrix> singular_witness(const GIMatrix& mu,
                                        const SampleConfig& cfg,
                                        unsigned threads = 1);

/// Largest rank seen over sampled completions; a lower bound on max_rank.
std::size_t sample_max_rank(const GIMatrix& mu, const SampleConfig& cfg,
                            unsigned threads = 1);

/// One contained completion sampled from the trial's grid (exposed for
/// direct completion sampling in tests and the CLI).
RMatrix sample_completion(const GIMatrix& mu, const SampleConfig& cfg,
                          std::size_t trial_index);

}  // namespace gim

#endif  // GIM_ORACLE_HPP
