#pragma once

namespace cslb {

struct SpecialFunctionConfig {
  double rel_tol = 1e-12;
  int max_terms = 200;
};

/// Sine integral Si(x) = \int_0^x sin(u)/u du.
///
/// Power series for |x| <= 2, complex continued fraction for E1(ix) above.
double si(double x, const SpecialFunctionConfig& cfg = {});

/// Error function. Maclaurin series for |x| < 2.5, erfc continued fraction
/// above.
double erf(double x, const SpecialFunctionConfig& cfg = {});

}  // namespace cslb
