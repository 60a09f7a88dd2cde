#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "mprof/oracle.hpp"

using namespace mprof;
using testutil::error_code_of;
using testutil::within;

namespace {

const TimeSeries kZig = make_time_series(testutil::kZigzag);

TimeSeries random_series(std::mt19937_64& rng, std::size_t n, bool gaussian) {
  return make_time_series(gaussian ? testutil::gaussian_samples(rng, n)
                                   : testutil::uniform_samples(rng, n));
}

}  // namespace

TEST_CASE("dist_euclidean on the zigzag series") {
  CHECK(dist_euclidean(kZig, 0, 4, 3) == 0.0);
  CHECK(within(dist_euclidean(kZig, 0, 1, 3), std::sqrt(3.0), 1e-15));
  CHECK(within(dist_euclidean(kZig, 0, 2, 3), std::sqrt(8.0), 1e-15));
}

TEST_CASE("dist_pnorm on the zigzag series") {
  CHECK(within(dist_pnorm(kZig, 0, 1, 3, 2.0), std::sqrt(3.0), 1e-15));
  CHECK(within(dist_pnorm(kZig, 0, 1, 3, 3.0), std::cbrt(3.0), 1e-15));
  CHECK(within(dist_pnorm(kZig, 1, 3, 3, 3.0), 2.0, 1e-15));
}

TEST_CASE("dist_znorm on the zigzag series") {
  const double flat = default_flat_threshold(3);
  CHECK(dist_znorm(kZig, 0, 4, 3, flat) == 0.0);
  CHECK(within(dist_znorm(kZig, 0, 2, 3, flat), std::sqrt(12.0), 1e-12));
  CHECK(within(dist_znorm(kZig, 0, 1, 3, flat), std::sqrt(6.0), 1e-12));
}

TEST_CASE("dist_znorm flat-window convention") {
  const TimeSeries ts = make_time_series({5, 5, 5, 1, 2});
  const double flat = default_flat_threshold(2);
  CHECK(dist_znorm(ts, 0, 1, 2, flat) == 0.0);                           // flat vs flat
  CHECK(dist_znorm(ts, 0, 3, 2, flat) == std::sqrt(4.0));                // flat vs varying
  CHECK(dist_znorm(ts, 3, 1, 2, flat) == std::sqrt(4.0));                // symmetric case
}

TEST_CASE("direct distances validate their window bounds") {
  CHECK(error_code_of([&] { dist_euclidean(kZig, 5, 0, 3); }) == ErrorCode::OutOfRange);
  CHECK(error_code_of([&] { dist_euclidean(kZig, 0, 5, 3); }) == ErrorCode::OutOfRange);
  CHECK(error_code_of([&] { dist_pnorm(kZig, 0, 6, 3, 2.0); }) == ErrorCode::OutOfRange);
  CHECK(error_code_of([&] { dist_znorm(kZig, 0, 0, 9, 0.0); }) == ErrorCode::OutOfRange);
  CHECK(error_code_of([&] { dist_pnorm(kZig, 0, 1, 3, 0.5); }) == ErrorCode::BadP);
}

TEST_CASE("brute_profile on the zigzag series, all three kinds") {
  const std::vector<double> euclid = {0.0, std::sqrt(3.0), std::sqrt(3.0), std::sqrt(3.0), 0.0};
  const std::vector<Index> euclid_nn = {4, 0, 1, 0, 0};
  const MatrixProfile pe = brute_profile(kZig, ProfileConfig(3, DistanceKind::euclidean()));
  REQUIRE(pe.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(within(pe.distances[i], euclid[i], 1e-12));
    CHECK(pe.nn_index[i] == euclid_nn[i]);
  }

  const MatrixProfile pp = brute_profile(kZig, ProfileConfig(3, DistanceKind::pnorm(3.0)));
  const std::vector<double> pnorm = {0.0, std::cbrt(3.0), std::cbrt(3.0), std::cbrt(3.0), 0.0};
  for (std::size_t i = 0; i < 5; ++i) CHECK(within(pp.distances[i], pnorm[i], 1e-12));

  const MatrixProfile pz = brute_profile(kZig, ProfileConfig(3, DistanceKind::znormalized()));
  const std::vector<double> znorm = {0.0, std::sqrt(6.0), std::sqrt(6.0), std::sqrt(6.0), 0.0};
  for (std::size_t i = 0; i < 5; ++i) CHECK(within(pz.distances[i], znorm[i], 1e-12));
}

TEST_CASE("brute_profile reports the distance of its own neighbor") {
  std::mt19937_64 rng(404);
  const TimeSeries ts = random_series(rng, 64, false);
  const ProfileConfig cfg(8, DistanceKind::euclidean());
  const MatrixProfile p = brute_profile(ts, cfg);
  for (std::size_t i = 0; i < p.size(); ++i) {
    REQUIRE(p.nn_index[i] != kNoNeighbor);
    CHECK(p.distances[i] == dist_euclidean(ts, i, static_cast<std::size_t>(p.nn_index[i]), 8));
  }
}

TEST_CASE("brute_profile honors the exclusion width") {
  std::mt19937_64 rng(405);
  const TimeSeries ts = random_series(rng, 48, true);
  ProfileConfig cfg(6, DistanceKind::euclidean());
  cfg.exclusion = 5;
  const MatrixProfile p = brute_profile(ts, cfg);
  for (std::size_t i = 0; i < p.size(); ++i) {
    REQUIRE(p.nn_index[i] != kNoNeighbor);
    const auto j = static_cast<std::size_t>(p.nn_index[i]);
    CHECK((i > j ? i - j : j - i) >= 5);
  }
}

TEST_CASE("maximal exclusion leaves middle entries without a neighbor") {
  std::mt19937_64 rng(406);
  const TimeSeries ts = random_series(rng, 12, false);
  ProfileConfig cfg(4, DistanceKind::euclidean());
  cfg.exclusion = 8;  // only the pair (0, 8) is admissible
  const MatrixProfile p = brute_profile(ts, cfg);
  REQUIRE(p.size() == 9);
  CHECK(p.nn_index[0] == 8);
  CHECK(p.nn_index[8] == 0);
  for (std::size_t i = 1; i < 8; ++i) {
    CHECK(p.nn_index[i] == kNoNeighbor);
    CHECK(std::isinf(p.distances[i]));
  }
}

TEST_CASE("symmetry and identity hold exactly") {
  std::mt19937_64 rng(407);
  for (int round = 0; round < 20; ++round) {
    const std::size_t n = 16 + rng() % 100;
    const TimeSeries ts = random_series(rng, n, round % 2 == 0);
    const std::size_t m = 2 + rng() % (n / 2);
    const std::size_t lim = ts.size() - m;
    const std::size_t i = rng() % (lim + 1);
    const std::size_t j = rng() % (lim + 1);
    CHECK(dist_euclidean(ts, i, j, m) == dist_euclidean(ts, j, i, m));
    CHECK(dist_pnorm(ts, i, j, m, 2.7) == dist_pnorm(ts, j, i, m, 2.7));
    const double flat = default_flat_threshold(m);
    CHECK(dist_znorm(ts, i, j, m, flat) == dist_znorm(ts, j, i, m, flat));
    CHECK(dist_euclidean(ts, i, i, m) == 0.0);
    CHECK(dist_pnorm(ts, i, i, m, 1.3) == 0.0);
    CHECK(dist_znorm(ts, i, i, m, flat) == 0.0);
  }
}

TEST_CASE("p = 2 agrees with the Euclidean distance") {
  std::mt19937_64 rng(408);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 16 + rng() % 64;
    const TimeSeries ts = random_series(rng, n, false);
    const std::size_t m = 2 + rng() % (n / 2);
    const std::size_t lim = ts.size() - m;
    const std::size_t i = rng() % (lim + 1);
    const std::size_t j = rng() % (lim + 1);
    CHECK(within(dist_pnorm(ts, i, j, m, 2.0), dist_euclidean(ts, i, j, m), 1e-12));
  }
}

TEST_CASE("triangle inequality holds for Euclidean and p-norm") {
  std::mt19937_64 rng(409);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 24 + rng() % 64;
    const TimeSeries ts = random_series(rng, n, true);
    const std::size_t m = 2 + rng() % (n / 3);
    const std::size_t lim = ts.size() - m;
    const std::size_t a = rng() % (lim + 1);
    const std::size_t b = rng() % (lim + 1);
    const std::size_t c = rng() % (lim + 1);
    for (const double p : {1.0, 1.7, 3.0}) {
      const double ab = dist_pnorm(ts, a, b, m, p);
      const double bc = dist_pnorm(ts, b, c, m, p);
      const double ac = dist_pnorm(ts, a, c, m, p);
      CHECK(ac <= ab + bc + 1e-9 * std::max(1.0, ab + bc));
    }
    const double ab = dist_euclidean(ts, a, b, m);
    const double bc = dist_euclidean(ts, b, c, m);
    CHECK(dist_euclidean(ts, a, c, m) <= ab + bc + 1e-9 * std::max(1.0, ab + bc));
  }
}

TEST_CASE("z-normalized distances stay within their range bound") {
  std::mt19937_64 rng(410);
  for (int round = 0; round < 30; ++round) {
    const std::size_t n = 16 + rng() % 64;
    const TimeSeries ts = random_series(rng, n, round % 2 == 1);
    const std::size_t m = 2 + rng() % (n / 2);
    const std::size_t lim = ts.size() - m;
    const std::size_t i = rng() % (lim + 1);
    const std::size_t j = rng() % (lim + 1);
    const double d = dist_znorm(ts, i, j, m, default_flat_threshold(m));
    CHECK(d >= 0.0);
    CHECK(d <= 2.0 * std::sqrt(static_cast<double>(m)) + 1e-9);
  }
}

TEST_CASE("profile entries never exceed an admissible pair distance") {
  std::mt19937_64 rng(411);
  const TimeSeries ts = random_series(rng, 72, false);
  const ProfileConfig cfg(9, DistanceKind::euclidean());
  const MatrixProfile p = brute_profile(ts, cfg);
  for (int round = 0; round < 200; ++round) {
    const std::size_t i = rng() % p.size();
    const std::size_t j = rng() % p.size();
    if (i == j) continue;
    CHECK(p.distances[i] <= dist_euclidean(ts, i, j, 9));
  }
}
