#pragma once

#include <algorithm>
#include <cmath>

#include "mprof/core.hpp"

namespace mprof {

/// The five running sums that determine the z-normalized distance of the
/// window pair (pos, pos + offset), maintained in O(1) per slide.
struct DiagStats {
  double sum_left = 0.0;    // sum of left-window samples
  double sum_right = 0.0;   // sum of right-window samples
  double sumsq_left = 0.0;  // sum of squared left-window samples
  double sumsq_right = 0.0; // sum of squared right-window samples
  double dot = 0.0;         // sum of elementwise products across the windows
  std::size_t offset = 0;   // diagonal: right window starts at pos + offset
  std::size_t pos = 0;      // left window start
};

/// Computes all five sums directly, O(m), for the first pair of diagonal k
/// (windows starting at 0 and k). Throws OutOfRange when k + m exceeds n.
DiagStats init_diag_stats(const TimeSeries& ts, std::size_t k, std::size_t m);

/// Slides the stats one position along the diagonal: subtract the samples
/// leaving each window, add the ones entering.
inline DiagStats advance_stats(DiagStats s, double t_out_i, double t_out_j, double t_in_i,
                               double t_in_j) {
  s.sum_left = s.sum_left - t_out_i + t_in_i;
  s.sum_right = s.sum_right - t_out_j + t_in_j;
  s.sumsq_left = s.sumsq_left - t_out_i * t_out_i + t_in_i * t_in_i;
  s.sumsq_right = s.sumsq_right - t_out_j * t_out_j + t_in_j * t_in_j;
  s.dot = s.dot - t_out_i * t_out_j + t_in_i * t_in_j;
  s.pos += 1;
  return s;
}

namespace detail {

// m * variance of each window; >= 0 up to floating cancellation.
inline double scaled_var_left(const DiagStats& s, double m) {
  return s.sumsq_left - s.sum_left * s.sum_left / m;
}
inline double scaled_var_right(const DiagStats& s, double m) {
  return s.sumsq_right - s.sum_right * s.sum_right / m;
}

// Non-throwing F value with the degenerate cases folded into the same
// comparison space: both windows flat maps to the smallest possible value
// -m^2 (distance 0), one flat maps to 0 (distance sqrt(2m)).
inline double f_value(const DiagStats& s, double m, double scaled_flat) {
  const double va = scaled_var_left(s, m);
  const double vb = scaled_var_right(s, m);
  const bool flat_a = va <= scaled_flat;
  const bool flat_b = vb <= scaled_flat;
  if (flat_a || flat_b) return (flat_a && flat_b) ? -(m * m) : 0.0;
  const double g = s.sum_left * s.sum_right - m * s.dot;
  return g * std::fabs(g) / (va * vb);
}

}  // namespace detail

/// Squared z-normalized distance from the running sums, clamped to [0, 4m].
/// Flat windows (variance <= flat_threshold): both flat -> 0, one -> 2m.
inline double znorm_sq_from_stats(const DiagStats& s, std::size_t m, double flat_threshold) {
  const double md = static_cast<double>(m);
  const double va = detail::scaled_var_left(s, md);
  const double vb = detail::scaled_var_right(s, md);
  const bool flat_a = va <= flat_threshold * md;
  const bool flat_b = vb <= flat_threshold * md;
  if (flat_a && flat_b) return 0.0;
  if (flat_a || flat_b) return 2.0 * md;
  const double corr = (s.dot - s.sum_left * s.sum_right / md) / std::sqrt(va * vb);
  return std::max(0.0, std::min(2.0 * md * (1.0 - corr), 4.0 * md));
}

/// Square-root-free comparison score, strictly order-equivalent to the squared
/// z-normalized distance for a fixed m: F_a > F_b iff DZ^2_a > DZ^2_b.
/// Throws Degenerate when either window's variance is <= flat_threshold;
/// callers fall back to the flat-window convention.
double f_score(const DiagStats& s, std::size_t m, double flat_threshold = 0.0);

/// Recovers the z-normalized distance from an F score:
/// sqrt(clamp(2m + 2*sign(F)*sqrt(|F|), 0, 4m)).
inline double f_to_dz(double f, std::size_t m) {
  const double md = static_cast<double>(m);
  const double signed_root = f < 0.0 ? -std::sqrt(-f) : std::sqrt(f);
  const double dz_sq = std::max(0.0, std::min(2.0 * md + 2.0 * signed_root, 4.0 * md));
  return std::sqrt(dz_sq);
}

/// Which comparison value the scan keeps per cell. Both produce the same
/// profile; FScore avoids the per-cell square root and is the default.
enum class AcampVariant { SquaredDistance, FScore };

/// z-normalized matrix profile by diagonal scan over the running sums.
/// Requires cfg.kind.family == ZNormalized. Observer and threads behave as in
/// aamp().
MatrixProfile acamp(const TimeSeries& ts, const ProfileConfig& cfg,
                    AcampVariant variant = AcampVariant::FScore, ProgressFn progress = {},
                    unsigned threads = 0);

}  // namespace mprof
