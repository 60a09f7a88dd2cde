#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mprof/core.hpp"

namespace mprof {

struct BenchRow {
  std::string engine;
  std::size_t n = 0;
  std::size_t m = 0;
  double wall_seconds = 0.0;     // averaged over repeats
  double cells_per_second = 0.0; // admissible pair count / wall_seconds
  double checksum = 0.0;         // sum of profile distances
};

/// Engines the harness can time. "aamp_pnorm" runs with p = 3; "oracle" is
/// the brute-force Euclidean profile.
bool is_bench_engine(const std::string& name);

struct BenchPlan {
  enum class Sweep { N, M };

  Sweep sweep = Sweep::N;
  std::vector<std::size_t> n_list;   // empty = sweep default {2^14..2^17} / fixed 2^16
  std::vector<std::size_t> m_list;   // empty = fixed 2^8 / sweep default {2^8..2^14}
  std::vector<std::string> engines;  // empty = {"aamp", "acamp_f"}
  int repeats = 2;
  std::uint64_t seed = 0;
};

/// Times each engine over the swept sizes on seeded uniform random series.
/// When sink is non-null the CSV header and rows stream to it as they finish.
/// Throws OutOfRange for repeats < 1, BadKind for unknown engines, and the
/// usual validation errors for impossible (n, m) pairs.
std::vector<BenchRow> run_bench(const BenchPlan& plan, std::ostream* sink = nullptr);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace mprof
