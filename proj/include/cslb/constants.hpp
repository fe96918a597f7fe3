#pragma once

// CODATA 2018 exact / recommended values, SI.
namespace cslb::constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double elementary_charge = 1.602176634e-19;   // C
inline constexpr double hbar = 1.054571817e-34;                // J s
inline constexpr double boltzmann = 1.380649e-23;              // J/K
inline constexpr double nucleon_mass = 1.67262192369e-27;      // kg (proton)

}  // namespace cslb::constants
