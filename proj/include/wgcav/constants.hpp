// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>

namespace wgcav::constants {

inline constexpr double pi = std::numbers::pi;

/// c — speed of light in vacuum [m/s] (exact, SI definition).
inline constexpr double c_light = 299792458.0;

/// Conversion helpers. All angular rates are stored in rad/s internally;
/// reports print cyclic frequencies (value / 2pi) in MHz.
inline constexpr double rad_per_s_to_mhz(double w) { return w / (2.0 * pi) / 1e6; }
inline constexpr double mhz_to_rad_per_s(double f_mhz) { return f_mhz * 1e6 * 2.0 * pi; }

inline constexpr double m3_to_um3(double v) { return v * 1e18; }
inline constexpr double um_to_m(double v) { return v * 1e-6; }
inline constexpr double m_to_um(double v) { return v * 1e6; }
inline constexpr double m_to_nm(double v) { return v * 1e9; }

} // namespace wgcav::constants
