// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>

#include "wgcav/sphere_modes.hpp"

namespace wgcav {

/// Which field-intensity density defines E_max in the mode-volume and
/// field-ratio normalizations. EpsWeighted uses the peak of sqrt(eps)|E|
/// (the integrand density of the mode-volume integral); Plain uses the peak
/// of |E| alone. Reports record which one was used.
enum class EmaxConvention { EpsWeighted, Plain };

inline const char* to_string(EmaxConvention c) {
    return c == EmaxConvention::EpsWeighted ? "eps_weighted" : "plain";
}

struct FieldSample {
    std::complex<double> e_rho, e_phi, e_z;
    double eps_r = 1.0;
    double intensity() const {
        return std::norm(e_rho) + std::norm(e_phi) + std::norm(e_z);
    }
};

/// Exact vector eigenfield of a converged sphere resonance (interior Bessel /
/// exterior Hankel construction), fundamental azimuthal family m = l.
/// Amplitudes are fixed by tangential-E continuity with the interior
/// coefficient set to 1; overall scale is arbitrary.
class SphereModeField {
public:
    explicit SphereModeField(const SphereResonance& res);

    /// E components in the meridional plane at (rho, z) in meters, phi = 0.
    FieldSample evaluate(double rho, double z) const;

    /// E just outside the dielectric boundary at polar angle theta (from +z).
    FieldSample surface_exterior(double theta) const;

    const SphereResonance& resonance() const { return res_; }

private:
    SphereResonance res_;
    std::complex<double> ext_coef_; // exterior amplitude from tangential continuity
    double sqrt_ll1_;
};

/// Scalar metrics shared by the analytic and finite-element paths.
struct SphereModeMetrics {
    double mode_volume = 0;              // m^3, quantization-box integral
    double atom_site_rho = 0, atom_site_z = 0;
    double normalized_field_at_atom = 0; // |E(atom)| / E_max per convention
    double clipped_energy_fraction = 0;  // mode energy outside the box estimate
    EmaxConvention convention = EmaxConvention::EpsWeighted;
};

/// Quantization region: a (width x height) box in the meridional plane
/// centered on the radial cavity boundary (rho = D/2, z = 0).
struct QuantizationBox {
    double center_rho = 0; // m
    double width = 10e-6;  // m
    double height = 10e-6; // m
    double rho_min() const { return std::max(0.0, center_rho - width / 2); }
    double rho_max() const { return center_rho + width / 2; }
    double z_half() const { return height / 2; }
};

/// Mode volume, exterior-field maximum and atom-site data for an analytic
/// sphere mode, by recursive interface-splitting quadrature over the box.
SphereModeMetrics analyze_sphere_mode(const SphereModeField& field, const QuantizationBox& box,
                                      EmaxConvention convention = EmaxConvention::EpsWeighted);

/// Fraction of the mode's eps|E|^2 energy lying within `thickness` of the
/// exterior surface (adsorbed-layer overlap), relative to the box integral.
double sphere_surface_energy_fraction(const SphereModeField& field, const QuantizationBox& box,
                                      double thickness, double layer_index);

} // namespace wgcav
