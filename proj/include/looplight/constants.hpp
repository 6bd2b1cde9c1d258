#pragma once

namespace looplight::constants {

// CODATA 2018 values.
inline constexpr double kBoltzmann = 1.380649e-23;     // J/K
inline constexpr double cLight = 299792458.0;          // m/s
inline constexpr double eps0 = 8.8541878128e-12;       // F/m
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double atomicMassUnit = 1.66053906660e-27;  // kg

}  // namespace looplight::constants
