#include "mprof/core.hpp"

#include <cmath>

namespace mprof {

TimeSeries make_time_series(std::vector<double> samples) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) {
      throw Error(ErrorCode::NonFinite,
                  "sample " + std::to_string(i) + " is not finite");
    }
  }
  if (samples.size() < 2) {
    throw Error(ErrorCode::TooShort,
                "time series needs at least 2 samples, got " + std::to_string(samples.size()));
  }
  return TimeSeries(std::move(samples));
}

ProfileConfig validate_config(const TimeSeries& ts, const ProfileConfig& cfg) {
  const std::size_t n = ts.size();
  if (cfg.m < 1 || cfg.m > n - 1) {
    throw Error(ErrorCode::BadSubseqLen,
                "subsequence length " + std::to_string(cfg.m) + " outside [1, " +
                    std::to_string(n - 1) + "] for series of length " + std::to_string(n));
  }
  if (cfg.kind.family == DistanceFamily::PNorm && !(cfg.kind.p >= 1.0)) {
    throw Error(ErrorCode::BadP, "p-norm exponent must be >= 1, got " + std::to_string(cfg.kind.p));
  }
  if (cfg.exclusion < 1 || cfg.exclusion > n - cfg.m) {
    throw Error(ErrorCode::BadExclusion,
                "exclusion " + std::to_string(cfg.exclusion) + " outside [1, " +
                    std::to_string(n - cfg.m) + "]");
  }
  if (!(cfg.flat_threshold >= 0.0)) {
    throw Error(ErrorCode::BadThreshold, "flat_threshold must be >= 0");
  }
  return cfg;
}

}  // namespace mprof
