#pragma once

#include <numbers>

namespace ntnsim {

inline constexpr double kEarthRadiusKm = 6371.0;

// Rays are blocked by a ball slightly smaller than the Earth so that points
// placed on the surface (whose radius carries rounding error) still see the
// sky up to their geometric horizon. 1 mm.
inline constexpr double kBlockingRadiusKm = kEarthRadiusKm - 1e-6;

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s
inline constexpr double kSpeedOfLightKmS = kSpeedOfLight / 1000.0;
inline constexpr double kEarthMu = 398'600.4418;  // km^3/s^2

inline constexpr double kPi = std::numbers::pi;

}  // namespace ntnsim
