#pragma once

#include <cstdint>
#include <span>

namespace cslb {

/// Sample mean with its standard error.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;

  /// |mean - reference| in units of the standard error.
  double z_score(double reference) const;
  bool within_sigma(double reference, double n_sigma = 3.0) const;
};

/// Mean and standard error of the mean, summed in index order.
McEstimate summarize(std::span<const double> values);

/// SplitMix64 mixing of (seed, stream index): the seed of trajectory `index`
/// in an ensemble drawn with `seed`. Sharded and serial runs agree because
/// every index owns its own stream.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace cslb
