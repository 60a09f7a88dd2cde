#include "mprof/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>

#include "mprof/aamp.hpp"
#include "mprof/acamp.hpp"
#include "mprof/oracle.hpp"

namespace mprof {

namespace {

constexpr double kBenchPnormP = 3.0;

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

TimeSeries uniform_series(std::uint64_t seed, std::size_t n, std::size_t m) {
  std::mt19937_64 rng(mix64(seed) ^ mix64(mix64(n) + m));
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> samples(n);
  for (double& s : samples) s = dist(rng);
  return make_time_series(std::move(samples));
}

MatrixProfile dispatch(const std::string& engine, const TimeSeries& ts, std::size_t m) {
  if (engine == "aamp") return aamp(ts, ProfileConfig(m, DistanceKind::euclidean()));
  if (engine == "aamp_pnorm") {
    return aamp_pnorm(ts, ProfileConfig(m, DistanceKind::pnorm(kBenchPnormP)));
  }
  if (engine == "acamp_sq") {
    return acamp(ts, ProfileConfig(m, DistanceKind::znormalized()),
                 AcampVariant::SquaredDistance);
  }
  if (engine == "acamp_f") {
    return acamp(ts, ProfileConfig(m, DistanceKind::znormalized()), AcampVariant::FScore);
  }
  if (engine == "oracle") return brute_profile(ts, ProfileConfig(m, DistanceKind::euclidean()));
  throw Error(ErrorCode::BadKind, "unknown engine '" + engine + "'");
}

void write_row(const BenchRow& row, std::ostream& out) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%.9g,%.9g,%.9g\n", row.engine.c_str(), row.n, row.m,
                row.wall_seconds, row.cells_per_second, row.checksum);
  out << buf;
  out.flush();
}

}  // namespace

bool is_bench_engine(const std::string& name) {
  return name == "aamp" || name == "aamp_pnorm" || name == "acamp_sq" || name == "acamp_f" ||
         name == "oracle";
}

std::vector<BenchRow> run_bench(const BenchPlan& plan, std::ostream* sink) {
  if (plan.repeats < 1) throw Error(ErrorCode::OutOfRange, "repeats must be >= 1");

  std::vector<std::string> engines =
      plan.engines.empty() ? std::vector<std::string>{"aamp", "acamp_f"} : plan.engines;
  for (const std::string& e : engines) {
    if (!is_bench_engine(e)) throw Error(ErrorCode::BadKind, "unknown engine '" + e + "'");
  }

  std::vector<std::pair<std::size_t, std::size_t>> sizes;  // (n, m)
  if (plan.sweep == BenchPlan::Sweep::N) {
    const std::vector<std::size_t> ns =
        plan.n_list.empty() ? std::vector<std::size_t>{1u << 14, 1u << 15, 1u << 16, 1u << 17}
                            : plan.n_list;
    const std::size_t m = plan.m_list.empty() ? (1u << 8) : plan.m_list.front();
    for (std::size_t n : ns) sizes.emplace_back(n, m);
  } else {
    const std::vector<std::size_t> ms =
        plan.m_list.empty() ? std::vector<std::size_t>{1u << 8,  1u << 9,  1u << 10, 1u << 11,
                                                       1u << 12, 1u << 13, 1u << 14}
                            : plan.m_list;
    const std::size_t n = plan.n_list.empty() ? (1u << 16) : plan.n_list.front();
    for (std::size_t m : ms) sizes.emplace_back(n, m);
  }

  if (sink) *sink << "engine,n,m,wall_seconds,cells_per_second,checksum\n";

  std::vector<BenchRow> rows;
  for (const auto& [n, m] : sizes) {
    const TimeSeries ts = uniform_series(plan.seed, n, m);
    for (const std::string& engine : engines) {
      double total = 0.0;
      double checksum = 0.0;
      for (int r = 0; r < plan.repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        const MatrixProfile profile = dispatch(engine, ts, m);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        total += elapsed.count();
        checksum = 0.0;
        for (const double d : profile.distances) checksum += d;
      }
      BenchRow row;
      row.engine = engine;
      row.n = n;
      row.m = m;
      row.wall_seconds = total / plan.repeats;
      const double cells = 0.5 * static_cast<double>(n - m) * static_cast<double>(n - m + 1);
      row.cells_per_second = cells / row.wall_seconds;
      row.checksum = checksum;
      if (sink) write_row(row, *sink);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "engine,n,m,wall_seconds,cells_per_second,checksum\n";
  for (const BenchRow& row : rows) write_row(row, out);
  if (!out) throw Error(ErrorCode::Io, "write failure on bench output");
}

}  // namespace mprof
