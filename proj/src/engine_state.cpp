#include "mprof/engine_state.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "detail/diag_scan.hpp"

namespace mprof {

EngineState build_engine_state(const TimeSeries& ts, const ProfileConfig& cfg, ProgressFn progress,
                               unsigned threads) {
  const ProfileConfig checked = validate_config(ts, cfg);
  const std::size_t lo = checked.exclusion;
  const std::size_t count = ts.size() - checked.m - lo + 1;

  EngineState st{ts, checked, {}, {}, {}, {}, {}};
  std::vector<DiagonalCursor>* pair_cursors = nullptr;
  std::vector<ZnormCursor>* znorm_cursors = nullptr;
  if (checked.kind.family == DistanceFamily::ZNormalized) {
    st.znorm_cursors.resize(count);
    znorm_cursors = &st.znorm_cursors;
  } else {
    st.tail_cursors.resize(count);
    pair_cursors = &st.tail_cursors;
  }

  // ZNormalized states scan in the default F-score space; extensions replay it.
  detail::EngineRun run = detail::run_engine(ts, checked, AcampVariant::FScore, progress, threads,
                                             pair_cursors, znorm_cursors);
  st.profile = std::move(run.profile);
  st.comparison = std::move(run.comparison);

  st.completed_diagonals.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (run.done_flags[idx]) st.completed_diagonals.push_back(lo + idx);
  }
  if (st.completed_diagonals.size() != count) {
    // cancelled run: keep only the cursors of diagonals that actually finished
    if (znorm_cursors) {
      std::vector<ZnormCursor> kept;
      kept.reserve(st.completed_diagonals.size());
      for (std::size_t k : st.completed_diagonals) kept.push_back(st.znorm_cursors[k - lo]);
      st.znorm_cursors = std::move(kept);
    } else {
      std::vector<DiagonalCursor> kept;
      kept.reserve(st.completed_diagonals.size());
      for (std::size_t k : st.completed_diagonals) kept.push_back(st.tail_cursors[k - lo]);
      st.tail_cursors = std::move(kept);
    }
  }
  return st;
}

EngineState extend_profile(const EngineState& state, std::span<const double> new_samples) {
  if (!state.complete()) {
    throw Error(ErrorCode::IncompleteState,
                "cannot extend a partially computed profile (" +
                    std::to_string(state.completed_diagonals.size()) + " of " +
                    std::to_string(state.ts.size() - state.cfg.m - state.cfg.exclusion + 1) +
                    " diagonals done)");
  }
  if (new_samples.empty()) return state;
  for (std::size_t i = 0; i < new_samples.size(); ++i) {
    if (!std::isfinite(new_samples[i])) {
      throw Error(ErrorCode::NonFinite, "appended sample " + std::to_string(i) + " is not finite");
    }
  }

  const ProfileConfig& cfg = state.cfg;
  std::vector<double> samples(state.ts.values().begin(), state.ts.values().end());
  samples.insert(samples.end(), new_samples.begin(), new_samples.end());

  EngineState out{make_time_series(std::move(samples)), cfg, {}, {}, {}, {}, {}};
  const std::size_t n_old = state.ts.size();
  const std::size_t n_new = out.ts.size();
  const std::size_t m = cfg.m;
  const std::size_t len_new = profile_length(n_new, m);
  const std::size_t lo = cfg.exclusion;
  const std::size_t hi_old = n_old - m;
  const std::size_t hi_new = n_new - m;
  const double* t = out.ts.data();
  const bool is_znorm = cfg.kind.family == DistanceFamily::ZNormalized;
  const bool is_pnorm = cfg.kind.family == DistanceFamily::PNorm;

  // Seed the running minima with the existing profile; min-updating only the
  // new cells then reproduces a from-scratch run bit for bit, because the
  // lexicographic min is order-independent and every cell value is computed
  // by the same arithmetic the initial scan used.
  detail::MinBuffer buf(len_new);
  std::copy(state.comparison.begin(), state.comparison.end(), buf.val.begin());
  std::copy(state.profile.nn_index.begin(), state.profile.nn_index.end(), buf.nn.begin());

  auto extend_pair_diag = [&](DiagonalCursor& cur) {
    const std::size_t last = n_new - m - cur.offset;
    while (cur.pos < last) {
      if (is_pnorm) {
        detail::advance_pnorm(cur, t, m, cfg.refresh_interval, cfg.kind.p);
      } else {
        detail::advance_euclid(cur, t, m, cfg.refresh_interval);
      }
      buf.update(cur.pos, cur.acc, cur.pos + cur.offset);
      buf.update(cur.pos + cur.offset, cur.acc, cur.pos);
    }
  };
  auto extend_znorm_diag = [&](ZnormCursor& cur) {
    const std::size_t last = n_new - m - cur.stats.offset;
    while (cur.stats.pos < last) {
      detail::advance_znorm(cur, t, m, cfg.refresh_interval);
      const double v = detail::znorm_cell_value(cur.stats, m, cfg.flat_threshold, true);
      buf.update(cur.stats.pos, v, cur.stats.pos + cur.stats.offset);
      buf.update(cur.stats.pos + cur.stats.offset, v, cur.stats.pos);
    }
  };

  if (is_znorm) {
    out.znorm_cursors = state.znorm_cursors;
    for (ZnormCursor& cur : out.znorm_cursors) extend_znorm_diag(cur);
    for (std::size_t k = hi_old + 1; k <= hi_new; ++k) {
      ZnormCursor cur;
      cur.stats = detail::direct_stats(t, 0, k, m);
      const double v = detail::znorm_cell_value(cur.stats, m, cfg.flat_threshold, true);
      buf.update(0, v, k);
      buf.update(k, v, 0);
      extend_znorm_diag(cur);
      out.znorm_cursors.push_back(cur);
    }
  } else {
    out.tail_cursors = state.tail_cursors;
    for (DiagonalCursor& cur : out.tail_cursors) extend_pair_diag(cur);
    for (std::size_t k = hi_old + 1; k <= hi_new; ++k) {
      DiagonalCursor cur{k, 0,
                         is_pnorm ? detail::direct_pnorm_acc(t, 0, k, m, cfg.kind.p)
                                  : detail::direct_sq_acc(t, 0, k, m),
                         0};
      buf.update(0, cur.acc, k);
      buf.update(k, cur.acc, 0);
      extend_pair_diag(cur);
      out.tail_cursors.push_back(cur);
    }
  }

  out.completed_diagonals.resize(hi_new - lo + 1);
  std::iota(out.completed_diagonals.begin(), out.completed_diagonals.end(), lo);

  const detail::CompSpace space = detail::comp_space_for(cfg, AcampVariant::FScore);
  out.profile.m = m;
  out.profile.kind = cfg.kind;
  out.profile.distances.resize(len_new);
  for (std::size_t i = 0; i < len_new; ++i) {
    out.profile.distances[i] = detail::to_distance(buf.val[i], space, cfg.kind.p, m);
  }
  out.profile.nn_index = std::move(buf.nn);
  out.comparison = std::move(buf.val);
  return out;
}

}  // namespace mprof
