// SPDX-License-Identifier: Apache-2.0

#include "wgcav/sphere_modes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wgcav/complex_bessel.hpp"
#include "wgcav/constants.hpp"

namespace wgcav {

using bessel::cdbl;
using bessel::riccati_pair;
using bessel::RiccatiPair;
using constants::pi;

namespace {

constexpr double kAiryZero1 = 2.338107410459767; // first zero of Ai(-x)

double pol_exponent(Polarization pol) { return pol == Polarization::TM ? 1.0 : 0.0; }

struct EqParts {
    cdbl lhs, rhs;
    RiccatiPair in, out;
};

EqParts eq_parts(cdbl k, int l, double n, double radius, Polarization pol) {
    const double b = pol_exponent(pol);
    EqParts p;
    p.in = riccati_pair(l, n * k * radius);
    p.out = riccati_pair(l, k * radius);
    const double pref = std::pow(n, 1.0 - 2.0 * b);
    p.lhs = pref * p.in.dpsi / p.in.psi;
    p.rhs = p.out.dchi / p.out.chi;
    return p;
}

cdbl residual_value(cdbl k, int l, double n, double radius, Polarization pol) {
    const EqParts p = eq_parts(k, l, n, radius, pol);
    return p.lhs - p.rhs;
}

// Count local maxima of |j_l(n k r)| on r in (0, R): 1 for the fundamental
// radial order, 2 for the second order, ...
int count_radial_antinodes(int l, double n, double k_re, double radius) {
    const int samples = 1600;
    std::vector<double> mag(samples);
    for (int i = 0; i < samples; ++i) {
        const double r = radius * (i + 1.0) / (samples + 1.0);
        const auto p = bessel::spherical_bessel_pair(l, cdbl(n * k_re * r, 0.0));
        mag[i] = std::abs(p.j);
    }
    const double floor_level = 1e-8 * *std::max_element(mag.begin(), mag.end());
    int antinodes = 0;
    for (int i = 1; i + 1 < samples; ++i)
        if (mag[i] > floor_level && mag[i] > mag[i - 1] && mag[i] >= mag[i + 1]) ++antinodes;
    return antinodes;
}

} // namespace

CharacteristicResidual characteristic_residual(cdbl k, int l, double n, double radius,
                                               Polarization pol) {
    if (k == cdbl(0.0)) throw std::invalid_argument("characteristic_residual: k must be nonzero");
    const EqParts p = eq_parts(k, l, n, radius, pol);
    CharacteristicResidual r;
    r.value = p.lhs - p.rhs;
    const double scale_in = std::abs(p.in.dpsi) + std::abs(p.in.psi);
    const double scale_out = std::abs(p.out.dchi) + std::abs(p.out.chi);
    r.near_pole = std::abs(p.in.psi) < 1e-12 * scale_in || std::abs(p.out.chi) < 1e-12 * scale_out;
    return r;
}

cdbl characteristic_entire(cdbl k, int l, double n, double radius, Polarization pol) {
    const double b = pol_exponent(pol);
    const RiccatiPair in = riccati_pair(l, n * k * radius);
    const RiccatiPair out = riccati_pair(l, k * radius);
    return std::pow(n, 1.0 - 2.0 * b) * in.dpsi * out.chi - out.dchi * in.psi;
}

cdbl initial_guess(int l, double n, double radius, Polarization pol) {
    if (l < 1) throw std::invalid_argument("initial_guess: l must be >= 1");
    const double nu = l + 0.5;
    const double P = (pol == Polarization::TE) ? n : 1.0 / n;
    const double nu13 = std::cbrt(nu);
    const double nx = nu + std::pow(2.0, -1.0 / 3.0) * kAiryZero1 * nu13
                      - P / std::sqrt(n * n - 1.0)
                      + 0.3 * std::pow(2.0, -2.0 / 3.0) * kAiryZero1 * kAiryZero1 / nu13;
    return cdbl(nx / (n * radius), 0.0);
}

SphereResonance find_sphere_resonance(int l, double n, double radius, Polarization pol,
                                      std::optional<cdbl> guess) {
    const cdbl k0 = guess.value_or(initial_guess(l, n, radius, pol));
    cdbl k = k0;
    cdbl f = residual_value(k, l, n, radius, pol);
    bool converged = false;
    cdbl k_prev = k, f_prev = f;
    int stagnant = 0;
    int iterations_used = 0;

    for (int it = 0; it < 80 && !converged; ++it) {
        iterations_used = it + 1;
        const double h = 1e-7 * std::abs(k);
        const cdbl fp = residual_value(k + h, l, n, radius, pol);
        const cdbl fm = residual_value(k - h, l, n, radius, pol);
        const cdbl df = (fp - fm) / (2.0 * h);
        if (df == cdbl(0.0)) break;
        cdbl dk = -f / df;
        // damping: shrink the step until the residual decreases
        cdbl k_new = k + dk;
        cdbl f_new = residual_value(k_new, l, n, radius, pol);
        for (int d = 0; d < 8 && std::abs(f_new) > std::abs(f); ++d) {
            dk *= 0.5;
            k_new = k + dk;
            f_new = residual_value(k_new, l, n, radius, pol);
        }
        if (std::abs(f_new) >= 0.999 * std::abs(f)) {
            if (++stagnant >= 3) {
                // Muller step from the three most recent iterates
                const cdbl q = (k_new - k) / (k - k_prev);
                const cdbl a = q * f_new - q * (1.0 + q) * f + q * q * f_prev;
                const cdbl bq = (2.0 * q + 1.0) * f_new - (1.0 + q) * (1.0 + q) * f + q * q * f_prev;
                const cdbl cc = (1.0 + q) * f_new;
                const cdbl disc = std::sqrt(bq * bq - 4.0 * a * cc);
                const cdbl den1 = bq + disc, den2 = bq - disc;
                const cdbl den = std::abs(den1) > std::abs(den2) ? den1 : den2;
                if (den != cdbl(0.0)) {
                    k_new = k_new - (k_new - k) * 2.0 * cc / den;
                    f_new = residual_value(k_new, l, n, radius, pol);
                }
                stagnant = 0;
            }
        } else {
            stagnant = 0;
        }
        k_prev = k;
        f_prev = f;
        const double step = std::abs(k_new - k);
        k = k_new;
        f = f_new;
        if (step < 1e-12 * std::abs(k)) converged = true;
    }
    if (!converged)
        throw std::runtime_error("find_sphere_resonance: root search did not converge");

    // verify on the pole-free form so a captured pole cannot masquerade as a root
    const RiccatiPair in = riccati_pair(l, n * k * radius);
    const RiccatiPair out = riccati_pair(l, k * radius);
    const double b = pol_exponent(pol);
    const cdbl t1 = std::pow(n, 1.0 - 2.0 * b) * in.dpsi * out.chi;
    const cdbl t2 = out.dchi * in.psi;
    if (std::abs(t1 - t2) > 1e-9 * std::max(std::abs(t1), std::abs(t2)))
        throw std::runtime_error("find_sphere_resonance: converged to a pole of the log-derivative form");

    SphereResonance res;
    res.l = l;
    res.polarization = pol;
    res.k = k;
    res.radius = radius;
    res.index = n;
    res.resonance_wavelength = 2.0 * pi / k.real();
    const double kim = std::abs(k.imag());
    if (kim / k.real() < 1e-13) {
        res.q_rad = 1e13;
        res.q_rad_lower_bound = true;
    } else {
        res.q_rad = k.real() / (2.0 * kim);
        res.q_rad_lower_bound = false;
    }
    res.radial_antinodes = count_radial_antinodes(l, n, k.real(), radius);
    res.iterations = iterations_used;
    return res;
}

int estimate_l_for_wavelength(double n, double radius, Polarization pol, double lambda_target) {
    const double kt = 2.0 * pi / lambda_target;
    const double P = (pol == Polarization::TE) ? n : 1.0 / n;
    double nu = n * kt * radius;
    for (int i = 0; i < 40; ++i)
        nu = n * kt * radius - std::pow(2.0, -1.0 / 3.0) * kAiryZero1 * std::cbrt(nu)
             + P / std::sqrt(n * n - 1.0)
             - 0.3 * std::pow(2.0, -2.0 / 3.0) * kAiryZero1 * kAiryZero1 / std::cbrt(nu);
    return std::max(1, static_cast<int>(std::lround(nu - 0.5)));
}

SphereResonance find_nearest_resonance(double n, double radius, Polarization pol,
                                       double lambda_target) {
    const int lc = estimate_l_for_wavelength(n, radius, pol, lambda_target);
    std::optional<SphereResonance> best;
    for (int l = std::max(1, lc - 3); l <= lc + 3; ++l) {
        SphereResonance r = find_sphere_resonance(l, n, radius, pol);
        if (!best || std::abs(r.resonance_wavelength - lambda_target)
                         < std::abs(best->resonance_wavelength - lambda_target))
            best = r;
    }
    return *best;
}

} // namespace wgcav
