// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>

namespace wgcav {

enum class Polarization { TE, TM };

inline const char* to_string(Polarization p) { return p == Polarization::TE ? "TE" : "TM"; }

/// One root of the dielectric-sphere characteristic equation.
/// Sign convention: fields go as exp(-i omega t) with omega = c k, so decaying
/// resonances have Im(k) < 0; q_rad = Re(k) / (2 |Im(k)|).
struct SphereResonance {
    int l = 0;
    Polarization polarization = Polarization::TM;
    std::complex<double> k;           // 1/m
    double resonance_wavelength = 0;  // 2 pi / Re(k)   [m]
    double q_rad = 0;                 // clamped to the precision floor policy below
    bool q_rad_lower_bound = false;   // |Im k|/Re k < 1e-13: q_rad reported as ">= 1e13"
    double radius = 0;                // m
    double index = 0;                 // interior index used for the solve
    int radial_antinodes = 0;         // 1 identifies the fundamental radial order
    int iterations = 0;               // root-finder iterations used
};

struct CharacteristicResidual {
    std::complex<double> value;  // LHS - RHS of the log-derivative characteristic equation
    bool near_pole = false;      // a denominator Riccati function is nearly zero
};

/// Residual of n^{1-2b} [x j_l(x)]'/(x j_l(x)) - [w h_l(w)]'/(w h_l(w)),
/// x = n k R, w = k R, b = 1 (TM) / 0 (TE). Zero exactly at a resonance.
CharacteristicResidual characteristic_residual(std::complex<double> k, int l, double n,
                                               double radius, Polarization pol);

/// Cross-multiplied (pole-free, entire) form of the same equation. Shares
/// roots with characteristic_residual but stays finite at Bessel zeros, so it
/// is the arbiter that a converged iterate is a root and not a captured pole.
std::complex<double> characteristic_entire(std::complex<double> k, int l, double n,
                                           double radius, Polarization pol);

/// Asymptotic fundamental-mode position estimate (Airy-zero expansion); good
/// enough to land in the Newton basin for 1.3 < n < 3.5 and 10 <= l <= 500.
std::complex<double> initial_guess(int l, double n, double radius, Polarization pol);

/// Damped Newton (numerical derivative) with a Muller fallback on stagnation.
/// Polishes to |dk|/|k| < 1e-12 and verifies the root on the entire form.
/// Throws on non-convergence or pole capture.
SphereResonance find_sphere_resonance(int l, double n, double radius, Polarization pol,
                                      std::optional<std::complex<double>> guess = {});

/// Fundamental resonance whose wavelength is closest to lambda_target, found
/// by scanning l around the asymptotic estimate.
SphereResonance find_nearest_resonance(double n, double radius, Polarization pol,
                                       double lambda_target);

/// l such that the fundamental resonance sits just above (in l) or below the
/// target wavelength; seed for scans.
int estimate_l_for_wavelength(double n, double radius, Polarization pol, double lambda_target);

} // namespace wgcav
