#pragma once

#include "mprof/core.hpp"

namespace mprof {

// Direct, non-incremental distance evaluations. These exist to cross-check the
// diagonal-scan engines; they deliberately share no code with them.

/// Euclidean distance between the length-m windows starting at i and j.
double dist_euclidean(const TimeSeries& ts, std::size_t i, std::size_t j, std::size_t m);

/// p-norm distance (|.|^p convention, p >= 1). Equals dist_euclidean at p = 2.
double dist_pnorm(const TimeSeries& ts, std::size_t i, std::size_t j, std::size_t m, double p);

/// z-normalized Euclidean distance. Windows whose variance is <= flat_threshold
/// count as flat: both flat -> 0, exactly one flat -> sqrt(2m).
double dist_znorm(const TimeSeries& ts, std::size_t i, std::size_t j, std::size_t m,
                  double flat_threshold);

/// Brute-force matrix profile: full double loop over admissible pairs with the
/// direct distances above. Ties pick the smallest neighbor index. O(n^2 * m).
MatrixProfile brute_profile(const TimeSeries& ts, const ProfileConfig& cfg);

}  // namespace mprof
