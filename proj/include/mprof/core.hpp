#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mprof {

/// Nearest-neighbor index type; kNoNeighbor marks entries with no admissible pair.
using Index = std::int64_t;
inline constexpr Index kNoNeighbor = -1;

enum class ErrorCode {
  NonFinite,
  TooShort,
  EmptyInput,
  ParseError,
  BadSubseqLen,
  BadP,
  BadExclusion,
  BadThreshold,
  BadKind,
  OutOfRange,
  Degenerate,
  IncompleteState,
  Io,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  /// 1-based input line for ParseError; 0 otherwise.
  std::size_t line() const noexcept { return line_; }

private:
  ErrorCode code_;
  std::size_t line_;
};

/// Immutable, validated sequence of finite real samples (length >= 2).
class TimeSeries {
public:
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  const double* data() const noexcept { return values_.data(); }

private:
  explicit TimeSeries(std::vector<double> values) : values_(std::move(values)) {}
  friend TimeSeries make_time_series(std::vector<double> samples);

  std::vector<double> values_;
};

/// Validates and wraps a sample vector. Throws NonFinite or TooShort.
TimeSeries make_time_series(std::vector<double> samples);

enum class DistanceFamily { Euclidean, PNorm, ZNormalized };

struct DistanceKind {
  DistanceFamily family = DistanceFamily::Euclidean;
  double p = 2.0;  // exponent, PNorm only

  static DistanceKind euclidean() noexcept { return {DistanceFamily::Euclidean, 2.0}; }
  static DistanceKind pnorm(double p) noexcept { return {DistanceFamily::PNorm, p}; }
  static DistanceKind znormalized() noexcept { return {DistanceFamily::ZNormalized, 2.0}; }
};

enum class DiagonalOrder { Ascending, RandomPermutation };

/// Default variance floor below which a window counts as flat.
inline double default_flat_threshold(std::size_t m) noexcept {
  return 1e-12 * static_cast<double>(m);
}

struct ProfileConfig {
  std::size_t m;
  DistanceKind kind;
  std::size_t exclusion = 1;  // minimum admissible |i - j|
  DiagonalOrder order = DiagonalOrder::Ascending;
  std::uint64_t order_seed = 0;
  std::size_t refresh_interval = 0;  // incremental steps between direct recomputations, 0 = never
  double flat_threshold;             // variance floor for z-normalization degeneracy

  ProfileConfig(std::size_t m, DistanceKind kind)
      : m(m), kind(kind), flat_threshold(default_flat_threshold(m)) {}
};

/// Checks cfg against ts and returns it unchanged.
/// Throws BadSubseqLen, BadP, BadExclusion, or BadThreshold.
ProfileConfig validate_config(const TimeSeries& ts, const ProfileConfig& cfg);

inline std::size_t profile_length(std::size_t n, std::size_t m) noexcept { return n - m + 1; }

struct MatrixProfile {
  std::vector<double> distances;  // per-subsequence nearest-neighbor distance
  std::vector<Index> nn_index;    // position achieving it, kNoNeighbor if none
  std::size_t m = 0;
  DistanceKind kind;

  std::size_t size() const noexcept { return distances.size(); }
};

/// Fires after each completed diagonal; return false to request cooperative
/// cancellation (the partial profile stays a valid upper bound).
using ProgressFn = std::function<bool(std::size_t diagonals_done, std::size_t diagonals_total)>;

}  // namespace mprof
