// SPDX-License-Identifier: Apache-2.0

#include "wgcav/sphere_field.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "wgcav/complex_bessel.hpp"
#include "wgcav/constants.hpp"

namespace wgcav {

using bessel::cdbl;
using bessel::riccati_pair;
using bessel::spherical_bessel_pair;

SphereModeField::SphereModeField(const SphereResonance& res) : res_(res) {
    const int l = res.l;
    const double n = res.index, R = res.radius;
    const cdbl k = res.k;
    sqrt_ll1_ = std::sqrt(double(l) * (l + 1.0));
    const auto in = riccati_pair(l, n * k * R);
    const auto out = riccati_pair(l, k * R);
    if (res.polarization == Polarization::TM) {
        // E_tangential continuity: (1/n) dpsi(nkR)/(nkR) = B dchi(kR)/(kR)
        ext_coef_ = in.dpsi / out.dchi / (n * n);
    } else {
        // E = f X on both sides: f continuity
        const auto jin = spherical_bessel_pair(l, n * k * R);
        const auto hout = spherical_bessel_pair(l, k * R);
        ext_coef_ = jin.j / hout.h1;
    }
}

FieldSample SphereModeField::evaluate(double rho, double z) const {
    const int l = res_.l;
    const double n = res_.index, R = res_.radius;
    const cdbl k = res_.k;
    const double r = std::hypot(rho, z);
    FieldSample out;
    if (r == 0.0) return out;
    const double theta = std::atan2(rho, z); // polar angle from +z axis
    const double st = std::sin(theta), ct = std::cos(theta);
    const bool inside = r < R;
    out.eps_r = inside ? n * n : 1.0;

    // angular factors for m = l: Y ~ sin^l(theta)
    if (st <= 0.0) return out;
    const double log_sl1 = (l - 1.0) * std::log(st);
    if (log_sl1 < -700.0) return out; // deep polar underflow: field is zero
    const double s_lm1 = std::exp(log_sl1);
    const double y_over_sin = l * s_lm1;        // m Y / sin(theta)
    const double dy_dtheta = l * ct * s_lm1;    // dY/dtheta
    const double y_val = s_lm1 * st;            // Y

    const cdbl x = (inside ? n * k : k) * r;
    const auto sph = spherical_bessel_pair(l, x);
    if (sph.out_of_range) return out;

    cdbl e_r = 0, e_th = 0, e_ph = 0;
    if (res_.polarization == Polarization::TM) {
        const cdbl coef = inside ? cdbl(1.0 / n) : ext_coef_;
        const cdbl zl = inside ? sph.j : sph.h1;
        const cdbl dpsi = inside ? (sph.j + x * sph.jp) : (sph.h1 + x * sph.h1p);
        e_r = coef * sqrt_ll1_ * (zl / x) * y_val;
        e_th = coef * (dpsi / x) * dy_dtheta / sqrt_ll1_;
        e_ph = coef * (dpsi / x) * cdbl(0, 1) * y_over_sin / sqrt_ll1_;
    } else {
        const cdbl f = inside ? sph.j : ext_coef_ * sph.h1;
        e_th = f * cdbl(0, 1) * y_over_sin / sqrt_ll1_;
        e_ph = -f * dy_dtheta / sqrt_ll1_;
    }
    out.e_rho = e_r * st + e_th * ct;
    out.e_z = e_r * ct - e_th * st;
    out.e_phi = e_ph;
    return out;
}

FieldSample SphereModeField::surface_exterior(double theta) const {
    const double r = res_.radius * (1.0 + 1e-12);
    return evaluate(r * std::sin(theta), r * std::cos(theta));
}

namespace {

struct BoxIntegrand {
    const SphereModeField& field;
    double weighted_peak = 0;   // max of eps |E|^2
    double plain_peak = 0;      // max of |E|^2
    double peak_rho = 0, peak_z = 0;
};

// 4x4 tensor Gauss-Legendre on a rectangle
void gauss_cell(const SphereModeField& f, double r0, double r1, double z0, double z1,
                double& acc, BoxIntegrand* peaks) {
    static const double gp[4] = {-0.8611363115940526, -0.3399810435848563,
                                 0.3399810435848563, 0.8611363115940526};
    static const double gw[4] = {0.3478548451374538, 0.6521451548625461,
                                 0.6521451548625461, 0.3478548451374538};
    const double hr = (r1 - r0) / 2, hz = (z1 - z0) / 2;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double rho = r0 + hr * (1 + gp[i]);
            const double z = z0 + hz * (1 + gp[j]);
            const FieldSample s = f.evaluate(rho, z);
            const double w = s.eps_r * s.intensity();
            acc += gw[i] * gw[j] * hr * hz * w * 2.0 * constants::pi * rho;
            if (peaks) {
                if (w > peaks->weighted_peak) {
                    peaks->weighted_peak = w;
                    peaks->peak_rho = rho;
                    peaks->peak_z = z;
                }
                peaks->plain_peak = std::max(peaks->plain_peak, s.intensity());
            }
        }
}

// recursive quadrature, splitting cells crossed by the dielectric interface
void integrate_cell(const SphereModeField& f, double R, double r0, double r1, double z0,
                    double z1, int depth, double& acc, BoxIntegrand* peaks) {
    const double d00 = std::hypot(r0, z0), d01 = std::hypot(r0, z1);
    const double d10 = std::hypot(r1, z0), d11 = std::hypot(r1, z1);
    const double dmin = std::min(std::min(d00, d01), std::min(d10, d11));
    const double dmax = std::max(std::max(d00, d01), std::max(d10, d11));
    const bool crossed = dmin < R && dmax > R;
    const double cell = std::max(r1 - r0, z1 - z0);
    if ((crossed && depth < 11) || cell > 0.35e-6) {
        const double rm = (r0 + r1) / 2, zm = (z0 + z1) / 2;
        integrate_cell(f, R, r0, rm, z0, zm, depth + 1, acc, peaks);
        integrate_cell(f, R, rm, r1, z0, zm, depth + 1, acc, peaks);
        integrate_cell(f, R, r0, rm, zm, z1, depth + 1, acc, peaks);
        integrate_cell(f, R, rm, r1, zm, z1, depth + 1, acc, peaks);
        return;
    }
    gauss_cell(f, r0, r1, z0, z1, acc, peaks);
}

} // namespace

SphereModeMetrics analyze_sphere_mode(const SphereModeField& field, const QuantizationBox& box,
                                      EmaxConvention convention) {
    const double R = field.resonance().radius;
    BoxIntegrand peaks{field};
    double integral = 0.0;
    integrate_cell(field, R, box.rho_min(), box.rho_max(), -box.z_half(), box.z_half(), 0,
                   integral, &peaks);

    // refine the peak with a local scan around the coarse argmax
    double wpk = peaks.weighted_peak, ppk = peaks.plain_peak;
    {
        const double h = 0.08e-6;
        for (int i = -24; i <= 24; ++i)
            for (int j = -24; j <= 24; ++j) {
                const double rho = peaks.peak_rho + i * h / 8, z = peaks.peak_z + j * h / 8;
                if (rho <= 0) continue;
                const FieldSample s = field.evaluate(rho, z);
                wpk = std::max(wpk, s.eps_r * s.intensity());
                ppk = std::max(ppk, s.intensity());
            }
    }

    // exterior maximum along the surface: coarse scan + golden-section refine
    const auto surf_i = [&](double th) { return field.surface_exterior(th).intensity(); };
    double best_th = constants::pi / 2, best_v = 0;
    for (int i = 0; i <= 720; ++i) {
        const double th = 1e-3 + (constants::pi - 2e-3) * i / 720.0;
        const double v = surf_i(th);
        if (v > best_v) {
            best_v = v;
            best_th = th;
        }
    }
    {
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = best_th - 5e-3, b = best_th + 5e-3;
        double c = b - gr * (b - a), d = a + gr * (b - a);
        for (int it = 0; it < 60; ++it) {
            if (surf_i(c) > surf_i(d)) b = d; else a = c;
            c = b - gr * (b - a);
            d = a + gr * (b - a);
        }
        best_th = (a + b) / 2;
        best_v = surf_i(best_th);
    }

    SphereModeMetrics m;
    m.convention = convention;
    const double denom = convention == EmaxConvention::EpsWeighted ? wpk : ppk;
    m.mode_volume = integral / denom;
    m.atom_site_rho = R * std::sin(best_th);
    m.atom_site_z = R * std::cos(best_th);
    m.normalized_field_at_atom = std::sqrt(best_v / denom);

    // energy clipped by the box: compare against a box grown by 2 um
    {
        QuantizationBox big = box;
        big.width += 4e-6;
        big.height += 4e-6;
        double big_integral = 0.0;
        integrate_cell(field, R, big.rho_min(), big.rho_max(), -big.z_half(), big.z_half(), 0,
                       big_integral, nullptr);
        m.clipped_energy_fraction = std::max(0.0, (big_integral - integral) / big_integral);
    }
    return m;
}

double sphere_surface_energy_fraction(const SphereModeField& field, const QuantizationBox& box,
                                      double thickness, double layer_index) {
    // shell energy ~ thickness * eps_layer * surface integral of |E_out|^2
    const double R = field.resonance().radius;
    double surf = 0.0;
    const int nth = 4000;
    for (int i = 0; i < nth; ++i) {
        const double th = constants::pi * (i + 0.5) / nth;
        const double v = field.surface_exterior(th).intensity();
        surf += v * 2.0 * constants::pi * (R * std::sin(th)) * R * (constants::pi / nth);
    }
    double integral = 0.0;
    integrate_cell(field, R, box.rho_min(), box.rho_max(), -box.z_half(), box.z_half(), 0,
                   integral, nullptr);
    if (integral <= 0) throw std::runtime_error("surface_energy_fraction: empty mode integral");
    return thickness * layer_index * layer_index * surf / integral;
}

} // namespace wgcav
