#pragma once

#include <algorithm>
#include <cmath>

#include "mprof/core.hpp"

namespace mprof {

namespace detail {

// |x|^p. The small integer exponents dominate real use, so they skip std::pow.
inline double abs_pow(double x, double p) {
  const double a = std::fabs(x);
  if (p == 1.0) return a;
  if (p == 2.0) return a * a;
  if (p == 3.0) return a * a * a;
  if (p == 4.0) return (a * a) * (a * a);
  return std::pow(a, p);
}

}  // namespace detail

/// Per-diagonal scan position. `acc` is the running comparison value for the
/// window pair (pos, pos + offset): the squared Euclidean distance, or the
/// p-th-power sum for the p-norm engine.
struct DiagonalCursor {
  std::size_t offset = 0;              // diagonal: right window starts at pos + offset
  std::size_t pos = 0;                 // left window start
  double acc = 0.0;                    // running D^2 or sum |diff|^p
  std::size_t steps_since_refresh = 0; // incremental steps since the last direct recomputation
};

/// Slides a squared-distance accumulator one position along a diagonal:
/// drops the pair of samples leaving the windows, adds the pair entering.
/// Clamped at 0 so floating cancellation cannot leak a negative into sqrt.
inline double incremental_euclidean_step(double acc_sq, double t_out_i, double t_out_j,
                                         double t_in_i, double t_in_j) {
  const double out = t_out_i - t_out_j;
  const double in = t_in_i - t_in_j;
  return std::max(0.0, acc_sq - out * out + in * in);
}

/// Same slide for the p-th-power accumulator (|.|^p convention).
inline double incremental_pnorm_step(double acc_p, double t_out_i, double t_out_j,
                                     double t_in_i, double t_in_j, double p) {
  return std::max(0.0, acc_p - detail::abs_pow(t_out_i - t_out_j, p) +
                           detail::abs_pow(t_in_i - t_in_j, p));
}

/// Euclidean matrix profile by diagonal scan. Accumulates squared distances
/// and takes one square root per profile entry at the end. Requires
/// cfg.kind.family == Euclidean (throws BadKind otherwise).
///
/// The observer, when given, fires after every completed diagonal; returning
/// false cancels the scan and the partial profile (an entrywise upper bound
/// with infinity sentinels on untouched entries) is returned as-is.
/// threads = 0 means one worker per hardware thread.
MatrixProfile aamp(const TimeSeries& ts, const ProfileConfig& cfg, ProgressFn progress = {},
                   unsigned threads = 0);

/// p-norm matrix profile, same scan with a p-th-power accumulator and a final
/// ^(1/p) per entry. Requires cfg.kind.family == PNorm.
MatrixProfile aamp_pnorm(const TimeSeries& ts, const ProfileConfig& cfg, ProgressFn progress = {},
                         unsigned threads = 0);

}  // namespace mprof
