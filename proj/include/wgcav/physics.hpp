// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace wgcav {

/// Two-number model of an atomic transition: transverse dipole decay rate
/// gamma_perp [rad/s] and transition wavelength [m].
struct AtomicTransition {
    double gamma_perp = 0.0; // rad/s
    double wavelength = 0.0; // m
    std::string label;

    void validate() const {
        if (gamma_perp <= 0.0) throw std::invalid_argument("AtomicTransition: gamma_perp must be > 0");
        if (wavelength <= 0.0) throw std::invalid_argument("AtomicTransition: wavelength must be > 0");
    }
};

/// Cesium D2 line: gamma_perp/2pi = 2.61 MHz, lambda = 852.359 nm.
AtomicTransition cesium_d2();

/// Dielectric description of the resonator: interior index (constant or a
/// fused-silica Sellmeier fit evaluated at the working wavelength), exterior
/// index, and the material-absorption-limited quality factor.
struct MaterialModel {
    enum class IndexLaw { Constant, FusedSilicaSellmeier };

    IndexLaw law = IndexLaw::FusedSilicaSellmeier;
    double constant_index = 1.45;  // used when law == Constant
    double exterior_index = 1.0;
    double q_material = 2.4e10;    // silica absorption limit near 852 nm
    double q_material_wavelength = 852.359e-9; // reference only, recorded in reports

    void validate_at(double wavelength) const;
};

/// Interior refractive index at the given vacuum wavelength [m].
/// Throws std::domain_error outside the dispersion-law validity range.
double evaluate_index(const MaterialModel& material, double wavelength);

/// Fused silica index (Malitson three-term Sellmeier), wavelength in meters.
/// Valid for 0.21 um <= lambda <= 6.7 um.
double fused_silica_index(double wavelength);

/// Per-channel quality factors and their harmonic composition.
/// A channel set to infinity() drops out of the composition.
struct QualityBudget {
    double q_rad = 0.0;
    double q_mat = 0.0;
    std::optional<double> q_water;
    double q_total = 0.0;
};

/// V_a = 3 c lambda^2 / (4 pi gamma_perp)  [m^3]
double atomic_interaction_volume(const AtomicTransition& t);

/// kappa = pi c / (lambda Q)  [rad/s]; rejects q <= 0.
double kappa_from_q(double wavelength, double q);

/// Q = omega tau = 2 pi c tau / lambda from a ringdown photon lifetime.
double q_from_ringdown(double photon_lifetime, double wavelength);

} // namespace wgcav
