#include "mprof/csv_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace mprof {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

bool parse_sample(std::string_view field, double& out) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);  // from_chars rejects '+'
  if (field.empty()) return false;
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

TimeSeries read_series_csv(std::istream& in) {
  std::vector<double> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view field(line);
    if (const auto comma = field.find(','); comma != std::string_view::npos) {
      field = field.substr(0, comma);
    }
    field = trim(field);
    if (field.empty()) continue;
    double value;
    if (!parse_sample(field, value)) {
      if (line_no == 1) continue;  // header line
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": cannot parse '" + std::string(field) +
                      "' as a number",
                  line_no);
    }
    samples.push_back(value);
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read failure on input stream");
  if (samples.empty()) throw Error(ErrorCode::EmptyInput, "input contains no samples");
  return make_time_series(std::move(samples));
}

void write_profile_csv(const MatrixProfile& profile, std::ostream& out) {
  out << "index,distance,nn_index\n";
  char buf[64];
  for (std::size_t i = 0; i < profile.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%#.9g", profile.distances[i]);
    out << i << ',' << buf << ',';
    if (profile.nn_index[i] != kNoNeighbor) out << profile.nn_index[i];
    out << '\n';
  }
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failure on profile output");
}

void write_series_csv(std::span<const double> samples, std::ostream& out) {
  char buf[64];
  for (const double v : samples) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf << '\n';
  }
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failure on series output");
}

}  // namespace mprof
