#include "gim/oracle.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gim/linalg.hpp"
#include "gim/rohn.hpp"

namespace gim {

namespace {

// splitmix64: tiny deterministic generator, identical on every platform.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Sampling grid density per entry; keeps denominators small and arithmetic
// exact.
constexpr std::uint64_t kGrid = 64;

Rational sample_entry(const GInterval& e, const Rational& cap,
                      SplitMix64& rng) {
  const Rational t =
      make_rational(static_cast<long>(rng.below(kGrid + 1)), kGrid);
  switch (e.kind()) {
    case GInterval::Kind::Constant:
      return e.value();
    case GInterval::Kind::Bounded:
      return e.lower() + t * (e.upper() - e.lower());
    case GInterval::Kind::LeftBounded:
      return e.lower() + t * cap;
    case GInterval::Kind::RightBounded:
      return e.upper() - t * cap;
    case GInterval::Kind::Unbounded:
      return -cap + t * (2 * cap);
  }
  return 0;  // unreachable
}

// Signed cofactor of cell (i,j): the coefficient of that entry in det(a).
Rational signed_cofactor(const RMatrix& a, std::size_t i, std::size_t j) {
  const Rational minor_det = det(erase_rows_cols(a, {i}, {j}));
  return (i + j) % 2 == 0 ? minor_det : -minor_det;
}

}  // namespace

RMatrix sample_completion(const GIMatrix& mu, const SampleConfig& cfg,
                          std::size_t trial_index) {
  if (cfg.magnitude_cap <= 0)
    throw std::invalid_argument("sample_completion: magnitude cap must be > 0");
  SplitMix64 rng(cfg.seed + trial_index);
  RMatrix a(mu.rows(), mu.cols());
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j)
      a(i, j) = sample_entry(mu(i, j), cfg.magnitude_cap, rng);
  return a;
}

std::pair<Rational, Rational> vertex_det_range(const GIMatrix& mu) {
  if (!mu.is_square())
    throw std::invalid_argument("vertex_det_range: matrix not square");
  if (!is_classical(mu))
    throw std::invalid_argument(
        "vertex_det_range: entry is half-bounded or unbounded");
  bool first = true;
  Rational lo, hi;
  for_each_vertex_matrix(mu, [&](const GIMatrix& v) {
    const Rational d = det(to_rmatrix(v));
    if (first) {
      lo = hi = d;
      first = false;
    } else {
      if (d < lo) lo = d;
      if (d > hi) hi = d;
    }
    return true;
  });
  return {lo, hi};
}

namespace {

// One witness trial: sample a completion, then walk the nonconstant cells
// and solve det = 0 along each (det is affine in a single entry).
std::optional<RMatrix> witness_trial(const GIMatrix& mu,
                                     const SampleConfig& cfg,
                                     std::size_t trial) {
  RMatrix a = sample_completion(mu, cfg, trial);
  const Rational d = det(a);
  if (d == 0) return a;
  for (std::size_t i = 0; i < mu.rows(); ++i)
    for (std::size_t j = 0; j < mu.cols(); ++j) {
      if (!mu(i, j).is_nonconstant()) continue;
      const Rational cof = signed_cofactor(a, i, j);
      if (cof == 0) continue;
      const Rational root = a(i, j) - d / cof;
      if (!mu(i, j).contains(root)) continue;
      RMatrix w = a;
      w(i, j) = root;
      if (det(w) != 0 || !contains(mu, w))
        throw std::logic_error("singular_witness: root check failed");
      return w;
    }
  return std::nullopt;
}

}  // namespace

std::optional<RMatrix> singular_witness(const GIMatrix& mu,
                                        const SampleConfig& cfg,
                                        unsigned threads) {
  if (!mu.is_square())
    throw std::invalid_argument("singular_witness: matrix not square");
  if (cfg.trials == 0) return std::nullopt;

  const unsigned workers = std::max(
      1u, std::min<unsigned>(threads, static_cast<unsigned>(cfg.trials)));
  if (workers == 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t)
      if (auto w = witness_trial(mu, cfg, t)) return w;
    return std::nullopt;
  }

  // The returned witness is the one from the lowest successful trial index,
  // so the outcome does not depend on scheduling.
  std::atomic<std::size_t> best_trial(cfg.trials);
  std::optional<RMatrix> best;
  std::mutex best_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t t = w; t < cfg.trials; t += workers) {
        if (t >= best_trial.load()) break;
        if (auto witness = witness_trial(mu, cfg, t)) {
          std::lock_guard<std::mutex> lock(best_mutex);
          if (t < best_trial.load()) {
            best_trial.store(t);
            best = std::move(witness);
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  return best;
}

std::size_t sample_max_rank(const GIMatrix& mu, const SampleConfig& cfg,
                            unsigned threads) {
  if (mu.empty() || cfg.trials == 0) return 0;
  const std::size_t saturation = std::min(mu.rows(), mu.cols());

  const unsigned workers = std::max(
      1u, std::min<unsigned>(threads, static_cast<unsigned>(cfg.trials)));
  if (workers == 1) {
    std::size_t best = 0;
    for (std::size_t t = 0; t < cfg.trials && best < saturation; ++t)
      best = std::max(best, rank(sample_completion(mu, cfg, t)));
    return best;
  }

  std::atomic<std::size_t> best(0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t t = w; t < cfg.trials; t += workers) {
        if (best.load() >= saturation) break;
        const std::size_t r = rank(sample_completion(mu, cfg, t));
        std::size_t current = best.load();
        while (r > current && !best.compare_exchange_weak(current, r)) {
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  return best.load();
}

}  // namespace gim
