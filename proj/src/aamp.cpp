#include "mprof/aamp.hpp"

#include "detail/diag_scan.hpp"

namespace mprof {

MatrixProfile aamp(const TimeSeries& ts, const ProfileConfig& cfg, ProgressFn progress,
                   unsigned threads) {
  const ProfileConfig checked = validate_config(ts, cfg);
  if (checked.kind.family != DistanceFamily::Euclidean) {
    throw Error(ErrorCode::BadKind, "aamp computes Euclidean profiles only");
  }
  return detail::run_engine(ts, checked, AcampVariant::FScore, progress, threads, nullptr, nullptr)
      .profile;
}

MatrixProfile aamp_pnorm(const TimeSeries& ts, const ProfileConfig& cfg, ProgressFn progress,
                         unsigned threads) {
  const ProfileConfig checked = validate_config(ts, cfg);
  if (checked.kind.family != DistanceFamily::PNorm) {
    throw Error(ErrorCode::BadKind, "aamp_pnorm requires a p-norm distance kind");
  }
  return detail::run_engine(ts, checked, AcampVariant::FScore, progress, threads, nullptr, nullptr)
      .profile;
}

}  // namespace mprof
