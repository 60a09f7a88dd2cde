#include "mprof/oracle.hpp"

#include <cmath>
#include <limits>

namespace mprof {

namespace {

void check_window(const TimeSeries& ts, std::size_t start, std::size_t m, const char* side) {
  if (m == 0 || start + m > ts.size()) {
    throw Error(ErrorCode::OutOfRange,
                std::string(side) + " window [" + std::to_string(start) + ", " +
                    std::to_string(start + m) + ") exceeds series of length " +
                    std::to_string(ts.size()));
  }
}

// |x|^p with exact forms for the small integer exponents the direct formula
// would otherwise spend almost all of its time inside std::pow for.
double abs_pow(double x, double p) {
  const double a = std::fabs(x);
  if (p == 1.0) return a;
  if (p == 2.0) return a * a;
  if (p == 3.0) return a * a * a;
  if (p == 4.0) return (a * a) * (a * a);
  return std::pow(a, p);
}

struct WindowMoments {
  double mean;
  double var;  // population variance
};

WindowMoments moments(const TimeSeries& ts, std::size_t start, std::size_t m) {
  double sum = 0.0;
  double sumsq = 0.0;
  for (std::size_t l = 0; l < m; ++l) {
    const double v = ts[start + l];
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / static_cast<double>(m);
  double var = sumsq / static_cast<double>(m) - mean * mean;
  if (var < 0.0) var = 0.0;
  return {mean, var};
}

}  // namespace

double dist_euclidean(const TimeSeries& ts, std::size_t i, std::size_t j, std::size_t m) {
  check_window(ts, i, m, "left");
  check_window(ts, j, m, "right");
  double sum = 0.0;
  for (std::size_t l = 0; l < m; ++l) {
    const double d = ts[i + l] - ts[j + l];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double dist_pnorm(const TimeSeries& ts, std::size_t i, std::size_t j, std::size_t m, double p) {
  check_window(ts, i, m, "left");
  check_window(ts, j, m, "right");
  if (!(p >= 1.0)) {
    throw Error(ErrorCode::BadP, "p-norm exponent must be >= 1, got " + std::to_string(p));
  }
  double sum = 0.0;
  for (std::size_t l = 0; l < m; ++l) {
    sum += abs_pow(ts[i + l] - ts[j + l], p);
  }
  return std::pow(sum, 1.0 / p);
}

double dist_znorm(const TimeSeries& ts, std::size_t i, std::size_t j, std::size_t m,
                  double flat_threshold) {
  check_window(ts, i, m, "left");
  check_window(ts, j, m, "right");
  const WindowMoments a = moments(ts, i, m);
  const WindowMoments b = moments(ts, j, m);
  const bool flat_a = a.var <= flat_threshold;
  const bool flat_b = b.var <= flat_threshold;
  if (flat_a && flat_b) return 0.0;
  if (flat_a || flat_b) return std::sqrt(2.0 * static_cast<double>(m));
  const double inv_sd_a = 1.0 / std::sqrt(a.var);
  const double inv_sd_b = 1.0 / std::sqrt(b.var);
  double sum = 0.0;
  for (std::size_t l = 0; l < m; ++l) {
    const double d = (ts[i + l] - a.mean) * inv_sd_a - (ts[j + l] - b.mean) * inv_sd_b;
    sum += d * d;
  }
  return std::sqrt(sum);
}

MatrixProfile brute_profile(const TimeSeries& ts, const ProfileConfig& cfg) {
  const ProfileConfig checked = validate_config(ts, cfg);
  const std::size_t len = profile_length(ts.size(), checked.m);

  MatrixProfile out;
  out.m = checked.m;
  out.kind = checked.kind;
  out.distances.assign(len, std::numeric_limits<double>::infinity());
  out.nn_index.assign(len, kNoNeighbor);

  for (std::size_t i = 0; i < len; ++i) {
    double best = std::numeric_limits<double>::infinity();
    Index best_j = kNoNeighbor;
    for (std::size_t j = 0; j < len; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap < checked.exclusion) continue;
      double d = std::numeric_limits<double>::infinity();
      switch (checked.kind.family) {
        case DistanceFamily::Euclidean:
          d = dist_euclidean(ts, i, j, checked.m);
          break;
        case DistanceFamily::PNorm:
          d = dist_pnorm(ts, i, j, checked.m, checked.kind.p);
          break;
        case DistanceFamily::ZNormalized:
          d = dist_znorm(ts, i, j, checked.m, checked.flat_threshold);
          break;
      }
      if (d < best) {
        best = d;
        best_j = static_cast<Index>(j);
      }
    }
    out.distances[i] = best;
    out.nn_index[i] = best_j;
  }
  return out;
}

}  // namespace mprof
