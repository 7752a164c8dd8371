// SPDX-License-Identifier: Apache-2.0

#include "wgcav/physics.hpp"

#include <cmath>

#include "wgcav/constants.hpp"

namespace wgcav {

using constants::c_light;
using constants::pi;

AtomicTransition cesium_d2() {
    return {2.0 * pi * 2.61e6, 852.359e-9, "Cs D2"};
}

double fused_silica_index(double wavelength) {
    // Malitson (1965) fit, lambda in microns.
    const double lu = wavelength * 1e6;
    if (lu < 0.21 || lu > 6.7)
        throw std::domain_error("fused_silica_index: wavelength outside Sellmeier validity range");
    const double l2 = lu * lu;
    const double b1 = 0.6961663, c1 = 0.0684043 * 0.0684043;
    const double b2 = 0.4079426, c2 = 0.1162414 * 0.1162414;
    const double b3 = 0.8974794, c3 = 9.896161 * 9.896161;
    const double s = b1 * l2 / (l2 - c1) + b2 * l2 / (l2 - c2) + b3 * l2 / (l2 - c3);
    return std::sqrt(1.0 + s);
}

double evaluate_index(const MaterialModel& material, double wavelength) {
    switch (material.law) {
        case MaterialModel::IndexLaw::Constant:
            return material.constant_index;
        case MaterialModel::IndexLaw::FusedSilicaSellmeier:
            return fused_silica_index(wavelength);
    }
    throw std::logic_error("evaluate_index: unknown index law");
}

void MaterialModel::validate_at(double wavelength) const {
    const double n = evaluate_index(*this, wavelength);
    if (!(exterior_index >= 1.0)) throw std::invalid_argument("MaterialModel: exterior index must be >= 1");
    if (!(n > exterior_index)) throw std::invalid_argument("MaterialModel: interior index must exceed exterior");
    if (!(q_material > 0.0)) throw std::invalid_argument("MaterialModel: q_material must be > 0");
}

double atomic_interaction_volume(const AtomicTransition& t) {
    t.validate();
    return 3.0 * c_light * t.wavelength * t.wavelength / (4.0 * pi * t.gamma_perp);
}

double kappa_from_q(double wavelength, double q) {
    if (!(q > 0.0)) throw std::invalid_argument("kappa_from_q: Q must be > 0");
    if (!(wavelength > 0.0)) throw std::invalid_argument("kappa_from_q: wavelength must be > 0");
    return pi * c_light / (wavelength * q);
}

double q_from_ringdown(double photon_lifetime, double wavelength) {
    if (!(photon_lifetime > 0.0)) throw std::invalid_argument("q_from_ringdown: lifetime must be > 0");
    const double omega = 2.0 * pi * c_light / wavelength;
    return omega * photon_lifetime;
}

} // namespace wgcav
