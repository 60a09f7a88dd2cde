#include "mprof/acamp.hpp"

#include <string>

#include "detail/diag_scan.hpp"

namespace mprof {

DiagStats init_diag_stats(const TimeSeries& ts, std::size_t k, std::size_t m) {
  if (m == 0 || k + m > ts.size()) {
    throw Error(ErrorCode::OutOfRange,
                "windows of length " + std::to_string(m) + " at 0 and " + std::to_string(k) +
                    " do not fit a series of length " + std::to_string(ts.size()));
  }
  return detail::direct_stats(ts.data(), 0, k, m);
}

double f_score(const DiagStats& s, std::size_t m, double flat_threshold) {
  const double md = static_cast<double>(m);
  const double scaled_flat = flat_threshold * md;
  if (detail::scaled_var_left(s, md) <= scaled_flat ||
      detail::scaled_var_right(s, md) <= scaled_flat) {
    throw Error(ErrorCode::Degenerate,
                "f_score needs both windows non-flat; use the flat-window convention instead");
  }
  return detail::f_value(s, md, scaled_flat);
}

MatrixProfile acamp(const TimeSeries& ts, const ProfileConfig& cfg, AcampVariant variant,
                    ProgressFn progress, unsigned threads) {
  const ProfileConfig checked = validate_config(ts, cfg);
  if (checked.kind.family != DistanceFamily::ZNormalized) {
    throw Error(ErrorCode::BadKind, "acamp requires the z-normalized distance kind");
  }
  return detail::run_engine(ts, checked, variant, progress, threads, nullptr, nullptr).profile;
}

}  // namespace mprof
