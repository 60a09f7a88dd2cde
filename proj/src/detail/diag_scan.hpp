#pragma once

// Shared diagonal-scan machinery behind aamp, acamp, and extend_profile:
// per-entry min buffers, the direct accumulator (re)computations, one-step
// cursor advances, scheduling, chunking, and worker fan-out.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "mprof/aamp.hpp"
#include "mprof/acamp.hpp"
#include "mprof/core.hpp"
#include "mprof/engine_state.hpp"

namespace mprof::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Running minima in comparison space. Updates and merges take the
// lexicographic (value, neighbor) minimum, which is commutative and
// associative, so the result is independent of cell order and worker count
// and ties always resolve to the smallest neighbor index.
struct MinBuffer {
  std::vector<double> val;
  std::vector<Index> nn;

  explicit MinBuffer(std::size_t len) : val(len, kInf), nn(len, kNoNeighbor) {}

  void update(std::size_t at, double v, std::size_t neighbor) {
    const Index j = static_cast<Index>(neighbor);
    if (v < val[at] || (v == val[at] && j < nn[at])) {
      val[at] = v;
      nn[at] = j;
    }
  }

  void absorb(const MinBuffer& other) {
    for (std::size_t i = 0; i < val.size(); ++i) {
      if (other.val[i] < val[i] || (other.val[i] == val[i] && other.nn[i] < nn[i])) {
        val[i] = other.val[i];
        nn[i] = other.nn[i];
      }
    }
  }
};

// --- direct accumulator computation (first pair, refresh, new diagonals) ---

inline double direct_sq_acc(const double* t, std::size_t i, std::size_t j, std::size_t m) {
  double acc = 0.0;
  for (std::size_t l = 0; l < m; ++l) {
    const double d = t[i + l] - t[j + l];
    acc += d * d;
  }
  return acc;
}

inline double direct_pnorm_acc(const double* t, std::size_t i, std::size_t j, std::size_t m,
                               double p) {
  double acc = 0.0;
  for (std::size_t l = 0; l < m; ++l) acc += abs_pow(t[i + l] - t[j + l], p);
  return acc;
}

inline DiagStats direct_stats(const double* t, std::size_t i, std::size_t j, std::size_t m) {
  DiagStats s;
  s.offset = j - i;
  s.pos = i;
  for (std::size_t l = 0; l < m; ++l) {
    const double a = t[i + l];
    const double b = t[j + l];
    s.sum_left += a;
    s.sum_right += b;
    s.sumsq_left += a * a;
    s.sumsq_right += b * b;
    s.dot += a * b;
  }
  return s;
}

// --- one-step advances, shared verbatim by the kernels and extend_profile ---
// With refresh > 0 every refresh-th step recomputes the accumulator directly
// instead of sliding it, bounding floating drift along long diagonals.

inline void advance_euclid(DiagonalCursor& cur, const double* t, std::size_t m,
                           std::size_t refresh) {
  const std::size_t i = cur.pos + 1;
  const std::size_t j = i + cur.offset;
  if (refresh > 0 && cur.steps_since_refresh + 1 >= refresh) {
    cur.acc = direct_sq_acc(t, i, j, m);
    cur.steps_since_refresh = 0;
  } else {
    cur.acc = incremental_euclidean_step(cur.acc, t[i - 1], t[j - 1], t[i + m - 1], t[j + m - 1]);
    cur.steps_since_refresh += 1;
  }
  cur.pos = i;
}

inline void advance_pnorm(DiagonalCursor& cur, const double* t, std::size_t m, std::size_t refresh,
                          double p) {
  const std::size_t i = cur.pos + 1;
  const std::size_t j = i + cur.offset;
  if (refresh > 0 && cur.steps_since_refresh + 1 >= refresh) {
    cur.acc = direct_pnorm_acc(t, i, j, m, p);
    cur.steps_since_refresh = 0;
  } else {
    cur.acc =
        incremental_pnorm_step(cur.acc, t[i - 1], t[j - 1], t[i + m - 1], t[j + m - 1], p);
    cur.steps_since_refresh += 1;
  }
  cur.pos = i;
}

inline void advance_znorm(ZnormCursor& cur, const double* t, std::size_t m, std::size_t refresh) {
  const std::size_t i = cur.stats.pos + 1;
  const std::size_t j = i + cur.stats.offset;
  if (refresh > 0 && cur.steps_since_refresh + 1 >= refresh) {
    cur.stats = direct_stats(t, i, j, m);
    cur.steps_since_refresh = 0;
  } else {
    cur.stats = advance_stats(cur.stats, t[i - 1], t[j - 1], t[i + m - 1], t[j + m - 1]);
    cur.steps_since_refresh += 1;
  }
}

// --- comparison space ------------------------------------------------------
// The scan keeps cheap-to-update values and converts once per entry at the
// end: squared Euclidean distance, p-th-power sum, squared z-normalized
// distance, or the sqrt-free F score.

enum class CompSpace { SquaredDist, PowerSum, ZnormSq, FScore };

inline CompSpace comp_space_for(const ProfileConfig& cfg, AcampVariant variant) {
  switch (cfg.kind.family) {
    case DistanceFamily::Euclidean:
      return CompSpace::SquaredDist;
    case DistanceFamily::PNorm:
      return CompSpace::PowerSum;
    case DistanceFamily::ZNormalized:
      return variant == AcampVariant::FScore ? CompSpace::FScore : CompSpace::ZnormSq;
  }
  return CompSpace::SquaredDist;
}

inline double to_distance(double v, CompSpace space, double p, std::size_t m) {
  if (v == kInf) return kInf;  // untouched anytime sentinel; must not be clamped
  switch (space) {
    case CompSpace::SquaredDist:
    case CompSpace::ZnormSq:
      return std::sqrt(v);
    case CompSpace::PowerSum:
      if (p == 1.0) return v;
      if (p == 2.0) return std::sqrt(v);
      return std::pow(v, 1.0 / p);
    case CompSpace::FScore:
      return f_to_dz(v, m);
  }
  return v;
}

inline double znorm_cell_value(const DiagStats& s, std::size_t m, double flat_threshold,
                               bool use_f) {
  return use_f ? f_value(s, static_cast<double>(m), flat_threshold * static_cast<double>(m))
               : znorm_sq_from_stats(s, m, flat_threshold);
}

// --- scan driver ------------------------------------------------------------

struct ScanCore {
  MinBuffer buf;
  std::vector<std::uint8_t> done_flags;  // per diagonal index (k - exclusion)
  bool cancelled = false;
};

inline unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs process(k, buf) over every diagonal offset of cfg's schedule. Workers
// own contiguous chunks of the schedule (balanced by cell count) and private
// buffers, merged at the end; the observer runs serialized and its false
// return cancels cooperatively at diagonal granularity.
template <class Process>
ScanCore scan_diagonals(std::size_t n, const ProfileConfig& cfg, const ProgressFn& progress,
                        unsigned threads, Process&& process) {
  const std::size_t len = profile_length(n, cfg.m);
  const std::size_t lo = cfg.exclusion;
  const std::size_t hi = n - cfg.m;
  const std::size_t count = hi - lo + 1;

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), lo);
  if (cfg.order == DiagonalOrder::RandomPermutation) {
    std::mt19937_64 rng(cfg.order_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  ScanCore core{MinBuffer(len), std::vector<std::uint8_t>(count, 0), false};

  std::atomic<bool> cancel{false};
  std::mutex progress_mu;
  std::size_t done = 0;  // guarded by progress_mu

  auto run_range = [&](std::size_t begin, std::size_t end, MinBuffer& buf) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      if (cancel.load(std::memory_order_relaxed)) return;
      const std::size_t k = order[idx];
      process(k, buf);
      core.done_flags[k - lo] = 1;
      if (progress) {
        std::lock_guard<std::mutex> lock(progress_mu);
        ++done;
        if (!progress(done, count)) cancel.store(true, std::memory_order_relaxed);
      }
    }
  };

  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
  if (workers <= 1) {
    run_range(0, count, core.buf);
  } else {
    std::size_t total = 0;
    for (std::size_t idx = 0; idx < count; ++idx) total += len - order[idx];
    std::vector<std::size_t> cuts(workers + 1, count);
    cuts[0] = 0;
    std::size_t prefix = 0;
    std::size_t next_cut = 1;
    for (std::size_t idx = 0; idx < count && next_cut < workers; ++idx) {
      prefix += len - order[idx];
      if (prefix * workers >= total * next_cut) cuts[next_cut++] = idx + 1;
    }

    std::vector<MinBuffer> bufs;
    bufs.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) bufs.emplace_back(len);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { run_range(cuts[w], cuts[w + 1], bufs[w]); });
    }
    for (auto& th : pool) th.join();

    core.buf = std::move(bufs[0]);
    for (unsigned w = 1; w < workers; ++w) core.buf.absorb(bufs[w]);
  }
  core.cancelled = cancel.load();
  return core;
}

// --- whole-engine run --------------------------------------------------------

struct EngineRun {
  MatrixProfile profile;
  std::vector<double> comparison;        // final minima in comparison space
  std::vector<std::uint8_t> done_flags;  // per diagonal index
  bool cancelled = false;
};

// Dispatches on cfg.kind.family (cfg must be validated). The cursor sinks,
// when non-null, must be sized to the diagonal count; each completed
// diagonal's tail cursor lands at index k - exclusion.
EngineRun run_engine(const TimeSeries& ts, const ProfileConfig& cfg, AcampVariant variant,
                     const ProgressFn& progress, unsigned threads,
                     std::vector<DiagonalCursor>* pair_cursors,
                     std::vector<ZnormCursor>* znorm_cursors);

}  // namespace mprof::detail
