#pragma once

#include "cslb/spectral.hpp"

namespace cslb {

enum class MeasureKind { I, J };

struct FluctuationMeasure {
  MeasureKind kind = MeasureKind::I;
  double threshold = 0.1;

  void validate() const;
};

/// E[xi(t) xibar(t)] = (1/t) \int_0^t delta(tau) dtau [1/s]. White gives 1/(2t)
/// (half the delta mass sits inside the interval).
double i_tilde(const CutoffSpec& spec, double t);

/// E[xibar(t)^2] = 2 Lambda(t) / t^2 [1/s].
double j_tilde(const CutoffSpec& spec, double t);

/// i_tilde and j_tilde divided by their t -> 0+ value delta(0); both lie in
/// (0, 1]. Throw WhiteNotNormalizable for White.
double i_norm(const CutoffSpec& spec, double t);
double j_norm(const CutoffSpec& spec, double t);

double normalized_measure(const FluctuationMeasure& m, const CutoffSpec& spec, double t);

}  // namespace cslb
