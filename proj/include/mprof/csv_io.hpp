#pragma once

#include <iosfwd>
#include <span>

#include "mprof/core.hpp"

namespace mprof {

/// Parses one sample per line, taking the first comma-separated column.
/// A non-numeric first line is skipped as a header; blank lines and CR line
/// endings are tolerated. Throws ParseError (carrying the 1-based line),
/// EmptyInput when no samples remain, and the TimeSeries validation errors.
TimeSeries read_series_csv(std::istream& in);

/// Emits "index,distance,nn_index" followed by one row per entry, 0-based,
/// distances at 9 significant digits; byte-for-byte deterministic. Entries
/// without a neighbor get an empty nn_index field. Throws Io on write failure.
void write_profile_csv(const MatrixProfile& profile, std::ostream& out);

/// One sample per line at 17 significant digits, so a read of the output
/// reproduces every double exactly. Throws Io on write failure.
void write_series_csv(std::span<const double> samples, std::ostream& out);

}  // namespace mprof
