#include "cslb/mc_estimate.hpp"

#include <cmath>
#include <limits>

namespace cslb {

double McEstimate::z_score(double reference) const {
  if (std_error <= 0.0) return mean == reference ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(mean - reference) / std_error;
}

bool McEstimate::within_sigma(double reference, double n_sigma) const {
  return z_score(reference) <= n_sigma;
}

McEstimate summarize(std::span<const double> values) {
  McEstimate est;
  est.samples = static_cast<std::int64_t>(values.size());
  if (values.empty()) return est;
  double sum = 0.0;
  for (double v : values) sum += v;
  est.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return est;
  double ss = 0.0;
  for (double v : values) ss += (v - est.mean) * (v - est.mean);
  const double n = static_cast<double>(values.size());
  est.std_error = std::sqrt(ss / (n - 1.0) / n);
  return est;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace cslb
