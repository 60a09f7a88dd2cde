#pragma once

// Shared test utilities: tolerance comparison, seeded generators, a tiny
// subprocess runner, and a profile-CSV parser for CLI-level checks.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mprof/core.hpp"

namespace testutil {

// Zigzag series used by the worked examples all over the suite.
inline const std::vector<double> kZigzag = {0, 1, 2, 1, 0, 1, 2};

// |a - b| <= tol * max(1, |a|, |b|): absolute near zero, relative elsewhere.
// Exactly equal values (infinities included) always pass.
inline bool within(double a, double b, double tol) {
  if (a == b) return true;
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

inline std::vector<double> uniform_samples(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                           double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

inline std::vector<double> gaussian_samples(std::mt19937_64& rng, std::size_t n, double mean = 0.0,
                                            double sd = 1.0) {
  std::normal_distribution<double> dist(mean, sd);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

// Runs fn and reports the mprof error code it threw, if any.
template <class Fn>
std::optional<mprof::ErrorCode> error_code_of(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const mprof::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

struct ProcResult {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, capturing stdout and the exit code.
inline ProcResult run_proc(const std::string& cmd) {
  ProcResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

struct ParsedProfile {
  std::vector<double> distances;
  std::vector<long long> nn;
  std::vector<std::string> distance_fields;  // raw distance text, for byte-level checks
};

inline ParsedProfile parse_profile_csv(const std::string& content) {
  ParsedProfile p;
  std::istringstream in(content);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const std::string dist = line.substr(c1 + 1, c2 - c1 - 1);
    const std::string nn = line.substr(c2 + 1);
    p.distances.push_back(std::strtod(dist.c_str(), nullptr));
    p.nn.push_back(nn.empty() ? -1 : std::strtoll(nn.c_str(), nullptr, 10));
    p.distance_fields.push_back(dist);
  }
  return p;
}

inline ParsedProfile parse_profile_file(const std::string& path) {
  return parse_profile_csv(read_file(path));
}

}  // namespace testutil
