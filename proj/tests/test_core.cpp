#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "mprof/core.hpp"

using namespace mprof;
using testutil::error_code_of;

TEST_CASE("make_time_series stores samples unmodified") {
  const TimeSeries ts = make_time_series(testutil::kZigzag);
  REQUIRE(ts.size() == 7);
  for (std::size_t i = 0; i < ts.size(); ++i) CHECK(ts[i] == testutil::kZigzag[i]);
  CHECK(ts.values().size() == 7);
  CHECK(ts.data()[2] == 2.0);
}

TEST_CASE("make_time_series rejects non-finite samples") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(error_code_of([&] { make_time_series({1.0, nan}); }) == ErrorCode::NonFinite);
  CHECK(error_code_of([&] { make_time_series({inf, 1.0}); }) == ErrorCode::NonFinite);
  CHECK(error_code_of([&] { make_time_series({1.0, -inf, 2.0}); }) == ErrorCode::NonFinite);
}

TEST_CASE("make_time_series rejects too-short input") {
  CHECK(error_code_of([] { make_time_series({3.0}); }) == ErrorCode::TooShort);
  CHECK(error_code_of([] { make_time_series({}); }) == ErrorCode::TooShort);
  CHECK(!error_code_of([] { make_time_series({3.0, 4.0}); }));
}

TEST_CASE("validate_config accepts a basic layout") {
  std::mt19937_64 rng(7);
  const TimeSeries ts = make_time_series(testutil::uniform_samples(rng, 8));
  const ProfileConfig cfg(3, DistanceKind::euclidean());
  const ProfileConfig checked = validate_config(ts, cfg);
  CHECK(checked.m == 3);
  CHECK(checked.exclusion == 1);
  CHECK(profile_length(ts.size(), checked.m) == 6);
}

TEST_CASE("validate_config rejects bad subsequence lengths") {
  std::mt19937_64 rng(8);
  const TimeSeries ts = make_time_series(testutil::uniform_samples(rng, 8));
  CHECK(error_code_of([&] { validate_config(ts, ProfileConfig(9, DistanceKind::euclidean())); }) ==
        ErrorCode::BadSubseqLen);
  CHECK(error_code_of([&] { validate_config(ts, ProfileConfig(8, DistanceKind::euclidean())); }) ==
        ErrorCode::BadSubseqLen);
  CHECK(error_code_of([&] { validate_config(ts, ProfileConfig(0, DistanceKind::euclidean())); }) ==
        ErrorCode::BadSubseqLen);
  CHECK(!error_code_of([&] { validate_config(ts, ProfileConfig(7, DistanceKind::euclidean())); }));
}

TEST_CASE("validate_config rejects p below 1") {
  std::mt19937_64 rng(9);
  const TimeSeries ts = make_time_series(testutil::uniform_samples(rng, 8));
  CHECK(error_code_of([&] { validate_config(ts, ProfileConfig(3, DistanceKind::pnorm(0.5))); }) ==
        ErrorCode::BadP);
  CHECK(!error_code_of([&] { validate_config(ts, ProfileConfig(3, DistanceKind::pnorm(1.0))); }));
  CHECK(!error_code_of([&] { validate_config(ts, ProfileConfig(3, DistanceKind::pnorm(4.5))); }));
}

TEST_CASE("validate_config rejects out-of-range exclusion") {
  std::mt19937_64 rng(10);
  const TimeSeries ts = make_time_series(testutil::uniform_samples(rng, 8));
  ProfileConfig cfg(3, DistanceKind::euclidean());
  cfg.exclusion = 0;
  CHECK(error_code_of([&] { validate_config(ts, cfg); }) == ErrorCode::BadExclusion);
  cfg.exclusion = 6;  // n - m = 5 is the last admissible offset
  CHECK(error_code_of([&] { validate_config(ts, cfg); }) == ErrorCode::BadExclusion);
  cfg.exclusion = 5;
  CHECK(!error_code_of([&] { validate_config(ts, cfg); }));
}

TEST_CASE("validate_config rejects a negative flat threshold") {
  std::mt19937_64 rng(11);
  const TimeSeries ts = make_time_series(testutil::uniform_samples(rng, 8));
  ProfileConfig cfg(3, DistanceKind::znormalized());
  cfg.flat_threshold = -1.0;
  CHECK(error_code_of([&] { validate_config(ts, cfg); }) == ErrorCode::BadThreshold);
}

TEST_CASE("validate_config is idempotent") {
  std::mt19937_64 rng(12);
  const TimeSeries ts = make_time_series(testutil::uniform_samples(rng, 32));
  ProfileConfig cfg(5, DistanceKind::pnorm(2.5));
  cfg.exclusion = 3;
  cfg.order = DiagonalOrder::RandomPermutation;
  cfg.order_seed = 99;
  cfg.refresh_interval = 64;
  const ProfileConfig once = validate_config(ts, cfg);
  const ProfileConfig twice = validate_config(ts, once);
  CHECK(twice.m == cfg.m);
  CHECK(twice.kind.family == cfg.kind.family);
  CHECK(twice.kind.p == cfg.kind.p);
  CHECK(twice.exclusion == cfg.exclusion);
  CHECK(twice.order == cfg.order);
  CHECK(twice.order_seed == cfg.order_seed);
  CHECK(twice.refresh_interval == cfg.refresh_interval);
  CHECK(twice.flat_threshold == cfg.flat_threshold);
}

TEST_CASE("distance kind factories carry their parameters") {
  CHECK(DistanceKind::euclidean().family == DistanceFamily::Euclidean);
  CHECK(DistanceKind::pnorm(3.5).family == DistanceFamily::PNorm);
  CHECK(DistanceKind::pnorm(3.5).p == 3.5);
  CHECK(DistanceKind::znormalized().family == DistanceFamily::ZNormalized);
}

TEST_CASE("default flat threshold scales with the window length") {
  CHECK(default_flat_threshold(1) == 1e-12);
  CHECK(default_flat_threshold(100) == 1e-10);
  CHECK(ProfileConfig(100, DistanceKind::znormalized()).flat_threshold == 1e-10);
}

TEST_CASE("parse errors carry their line number") {
  const Error e(ErrorCode::ParseError, "bad", 17);
  CHECK(e.code() == ErrorCode::ParseError);
  CHECK(e.line() == 17);
  CHECK(std::string(e.what()) == "bad");
}
