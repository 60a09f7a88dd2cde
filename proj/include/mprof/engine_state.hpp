#pragma once

#include <vector>

#include "mprof/aamp.hpp"
#include "mprof/acamp.hpp"
#include "mprof/core.hpp"

namespace mprof {

/// Tail cursor of one z-normalized diagonal: the running sums at the last
/// cell plus the refresh counter, enough to resume the slide.
struct ZnormCursor {
  DiagStats stats;
  std::size_t steps_since_refresh = 0;
};

/// A computed profile together with everything needed to grow it when more
/// samples arrive: the per-diagonal tail accumulators of the scan that built
/// it. Produced by build_engine_state, consumed by extend_profile.
///
/// `comparison` mirrors `profile.distances` in the engine's internal
/// comparison space (squared distance, p-th-power sum, or F score); new cells
/// min-update against it so an extension replays exactly the arithmetic a
/// from-scratch run would do.
struct EngineState {
  TimeSeries ts;
  ProfileConfig cfg;
  MatrixProfile profile;
  std::vector<double> comparison;
  std::vector<std::size_t> completed_diagonals;  // ascending offsets k
  std::vector<DiagonalCursor> tail_cursors;      // Euclidean / PNorm, parallel to completed_diagonals
  std::vector<ZnormCursor> znorm_cursors;        // ZNormalized, parallel to completed_diagonals

  /// True when every diagonal of the configured scan ran to completion.
  bool complete() const noexcept {
    return completed_diagonals.size() == ts.size() - cfg.m - cfg.exclusion + 1;
  }
};

/// Runs the engine matching cfg.kind and retains the per-diagonal tail state.
/// A cancelled run yields an incomplete state (still a valid upper-bound
/// profile) that extend_profile will refuse.
EngineState build_engine_state(const TimeSeries& ts, const ProfileConfig& cfg,
                               ProgressFn progress = {}, unsigned threads = 0);

/// Appends new_samples to the state's series and grows the profile to the new
/// length, computing only the new cells: existing diagonals resume from their
/// stored accumulators, new diagonals are scanned from the top. The result
/// matches a from-scratch run on the extended series.
/// Throws IncompleteState unless state.complete(), NonFinite on bad samples.
EngineState extend_profile(const EngineState& state, std::span<const double> new_samples);

}  // namespace mprof
