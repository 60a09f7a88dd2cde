#include "detail/diag_scan.hpp"

namespace mprof::detail {

namespace {

struct EuclidScan {
  const double* t;
  std::size_t n, m, refresh, lo;
  std::vector<DiagonalCursor>* cursors;

  void operator()(std::size_t k, MinBuffer& buf) const {
    DiagonalCursor cur{k, 0, direct_sq_acc(t, 0, k, m), 0};
    buf.update(0, cur.acc, k);
    buf.update(k, cur.acc, 0);
    const std::size_t last = n - m - k;
    for (std::size_t i = 1; i <= last; ++i) {
      advance_euclid(cur, t, m, refresh);
      buf.update(i, cur.acc, i + k);
      buf.update(i + k, cur.acc, i);
    }
    if (cursors) (*cursors)[k - lo] = cur;
  }
};

struct PnormScan {
  const double* t;
  std::size_t n, m, refresh, lo;
  double p;
  std::vector<DiagonalCursor>* cursors;

  void operator()(std::size_t k, MinBuffer& buf) const {
    DiagonalCursor cur{k, 0, direct_pnorm_acc(t, 0, k, m, p), 0};
    buf.update(0, cur.acc, k);
    buf.update(k, cur.acc, 0);
    const std::size_t last = n - m - k;
    for (std::size_t i = 1; i <= last; ++i) {
      advance_pnorm(cur, t, m, refresh, p);
      buf.update(i, cur.acc, i + k);
      buf.update(i + k, cur.acc, i);
    }
    if (cursors) (*cursors)[k - lo] = cur;
  }
};

struct ZnormScan {
  const double* t;
  std::size_t n, m, refresh, lo;
  double flat;
  bool use_f;
  bool hoist;     // ascending schedule: the position-0 left-window sums are loop-invariant
  double sum0;    // hoisted sum over t[0, m)
  double sumsq0;  // hoisted sum of squares over t[0, m)
  std::vector<ZnormCursor>* cursors;

  void operator()(std::size_t k, MinBuffer& buf) const {
    ZnormCursor cur;
    if (hoist) {
      DiagStats s;
      s.offset = k;
      s.sum_left = sum0;
      s.sumsq_left = sumsq0;
      for (std::size_t l = 0; l < m; ++l) {
        const double b = t[k + l];
        s.sum_right += b;
        s.sumsq_right += b * b;
        s.dot += t[l] * b;
      }
      cur.stats = s;
    } else {
      cur.stats = direct_stats(t, 0, k, m);
    }
    double v = znorm_cell_value(cur.stats, m, flat, use_f);
    buf.update(0, v, k);
    buf.update(k, v, 0);
    const std::size_t last = n - m - k;
    for (std::size_t i = 1; i <= last; ++i) {
      advance_znorm(cur, t, m, refresh);
      v = znorm_cell_value(cur.stats, m, flat, use_f);
      buf.update(i, v, i + k);
      buf.update(i + k, v, i);
    }
    if (cursors) (*cursors)[k - lo] = cur;
  }
};

}  // namespace

EngineRun run_engine(const TimeSeries& ts, const ProfileConfig& cfg, AcampVariant variant,
                     const ProgressFn& progress, unsigned threads,
                     std::vector<DiagonalCursor>* pair_cursors,
                     std::vector<ZnormCursor>* znorm_cursors) {
  const std::size_t n = ts.size();
  const double* t = ts.data();

  ScanCore core = [&] {
    switch (cfg.kind.family) {
      case DistanceFamily::PNorm:
        return scan_diagonals(
            n, cfg, progress, threads,
            PnormScan{t, n, cfg.m, cfg.refresh_interval, cfg.exclusion, cfg.kind.p, pair_cursors});
      case DistanceFamily::ZNormalized: {
        const bool hoist = cfg.order == DiagonalOrder::Ascending;
        double sum0 = 0.0;
        double sumsq0 = 0.0;
        if (hoist) {
          for (std::size_t l = 0; l < cfg.m; ++l) {
            sum0 += t[l];
            sumsq0 += t[l] * t[l];
          }
        }
        return scan_diagonals(n, cfg, progress, threads,
                              ZnormScan{t, n, cfg.m, cfg.refresh_interval, cfg.exclusion,
                                        cfg.flat_threshold, variant == AcampVariant::FScore, hoist,
                                        sum0, sumsq0, znorm_cursors});
      }
      case DistanceFamily::Euclidean:
      default:
        return scan_diagonals(
            n, cfg, progress, threads,
            EuclidScan{t, n, cfg.m, cfg.refresh_interval, cfg.exclusion, pair_cursors});
    }
  }();

  const CompSpace space = comp_space_for(cfg, variant);
  const std::size_t len = profile_length(n, cfg.m);

  EngineRun run;
  run.profile.m = cfg.m;
  run.profile.kind = cfg.kind;
  run.profile.distances.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    run.profile.distances[i] = to_distance(core.buf.val[i], space, cfg.kind.p, cfg.m);
  }
  run.profile.nn_index = std::move(core.buf.nn);
  run.comparison = std::move(core.buf.val);
  run.done_flags = std::move(core.done_flags);
  run.cancelled = core.cancelled;
  return run;
}

}  // namespace mprof::detail
