// SPDX-License-Identifier: Apache-2.0

#include "wgcav/complex_bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wgcav::bessel {

namespace {

constexpr double kRescaleLimit = 1e250;
constexpr double kRescale = 1e-250;

bool finite(cdbl v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Ratio j_l(z)/j_{l-1}(z) by modified Lentz continued fraction:
//   t_l = 1 / ((2l+1)/z - 1/((2l+3)/z - ...))
cdbl cf_ratio(int l, cdbl z) {
    const double tiny = 1e-290;
    cdbl f = tiny, C = f, D = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double coef = 2.0 * (l + i) + 1.0;
        const cdbl b = coef / z;
        const cdbl a = (i == 0) ? cdbl(1.0) : cdbl(-1.0);
        D = b + a * D;
        if (D == cdbl(0.0)) D = tiny;
        C = b + a / C;
        if (C == cdbl(0.0)) C = tiny;
        D = 1.0 / D;
        const cdbl delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 5e-17) return f;
    }
    throw std::runtime_error("spherical_bessel_pair: continued fraction failed to converge");
}

} // namespace

SphericalPair spherical_bessel_pair(int l, cdbl z) {
    if (l < 0) throw std::invalid_argument("spherical_bessel_pair: l must be >= 0");
    if (z == cdbl(0.0)) throw std::invalid_argument("spherical_bessel_pair: z must be nonzero");

    SphericalPair out;
    const cdbl sz = std::sin(z), cz = std::cos(z);
    const cdbl j0 = sz / z;
    if (!finite(sz) || !finite(cz)) {
        out.out_of_range = true; // |Im z| so large the elementary seeds overflow
        return out;
    }

    if (l == 0) {
        const cdbl j1 = sz / (z * z) - cz / z;
        const cdbl e0 = std::exp(cdbl(0, 1) * z);
        out.j = j0;
        out.jp = -j1;
        out.h1 = cdbl(0, -1) * e0 / z;
        out.h1p = (z + cdbl(0, 1)) * e0 / (z * z);
        return out;
    }

    // --- j by CF-seeded downward recurrence, with rescaling against overflow.
    // Work with f_k proportional to j_k; the proportionality is fixed at the
    // end against j_0 (or j_1 when z sits near a zero of j_0).
    const cdbl ratio = cf_ratio(l, z); // j_l / j_{l-1}
    cdbl f_hi = ratio, f_lo = 1.0;     // f_l, f_{l-1} in the running scale
    cdbl stored_l = f_hi, stored_lm1 = f_lo;
    cdbl f_kp1 = f_hi, f_k = f_lo;     // entering loop at k = l-1
    double stored_scale = 1.0;         // cumulative rescales applied to stored values
    cdbl f1 = (l == 1) ? f_kp1 : cdbl(0.0);
    for (int k = l - 1; k >= 1; --k) {
        cdbl f_km1 = (2.0 * k + 1.0) / z * f_k - f_kp1;
        f_kp1 = f_k;
        f_k = f_km1;
        if (std::abs(f_k.real()) > kRescaleLimit || std::abs(f_k.imag()) > kRescaleLimit) {
            f_k *= kRescale;
            f_kp1 *= kRescale;
            stored_l *= kRescale;
            stored_lm1 *= kRescale;
            stored_scale *= kRescale;
        }
        if (k == 1) f1 = f_kp1;
    }
    const cdbl f0 = f_k;
    const cdbl j1_true = sz / (z * z) - cz / z;
    // Normalize with the better-conditioned anchor.
    cdbl norm;
    if (std::abs(f0) * std::abs(j0) >= std::abs(f1) * std::abs(j1_true))
        norm = j0 / f0;
    else
        norm = j1_true / f1;
    out.j = stored_l * norm;
    const cdbl jm1 = stored_lm1 * norm;
    out.jp = jm1 - (l + 1.0) / z * out.j;
    if (!finite(out.j) || !finite(out.jp)) out.out_of_range = true;
    // rescaling flushed the top of the recurrence to zero: j_l underflowed
    if (stored_scale != 1.0 && (stored_l == cdbl(0.0) || std::abs(out.j) < 1e-290))
        out.out_of_range = true;

    // --- Hankel part. Upward recurrence is stable only for the solution that
    // is not exponentially decaying through the oscillatory band: that is h1
    // for Im z >= 0 and h2 for Im z < 0 (for real z both are neutral). Recur
    // on the dominant one and recover the other through j when needed.
    const bool use_h2 = z.imag() < -0.25;
    const cdbl eiz = std::exp(cdbl(0, use_h2 ? -1 : 1) * z);
    cdbl h_km1, h_k;
    if (!use_h2) {
        h_km1 = cdbl(0, -1) * eiz / z;               // h1_0
        h_k = -(z + cdbl(0, 1)) * eiz / (z * z);     // h1_1
    } else {
        h_km1 = cdbl(0, 1) * eiz / z;                // h2_0
        h_k = -(z - cdbl(0, 1)) * eiz / (z * z);     // h2_1
    }
    if (!finite(h_km1) || !finite(h_k)) {
        out.out_of_range = true;
        return out;
    }
    // upward walk to (h_l, h_{l-1}); for l == 1 the seeds already are that pair
    for (int k = 1; k < l; ++k) {
        const cdbl h_kp1 = (2.0 * k + 1.0) / z * h_k - h_km1;
        h_km1 = h_k;
        h_k = h_kp1;
        if (!finite(h_k)) {
            out.out_of_range = true;
            break;
        }
    }
    const cdbl hl = h_k;
    const cdbl hlp = h_km1 - (l + 1.0) / z * h_k;
    if (!use_h2) {
        out.h1 = hl;
        out.h1p = hlp;
    } else {
        out.h1 = 2.0 * out.j - hl;
        out.h1p = 2.0 * out.jp - hlp;
    }
    if (!finite(out.h1) || !finite(out.h1p)) out.out_of_range = true;
    return out;
}

RiccatiPair riccati_pair(int l, cdbl z) {
    const SphericalPair p = spherical_bessel_pair(l, z);
    RiccatiPair r;
    r.psi = z * p.j;
    r.dpsi = p.j + z * p.jp;
    r.chi = z * p.h1;
    r.dchi = p.h1 + z * p.h1p;
    r.out_of_range = p.out_of_range;
    return r;
}

} // namespace wgcav::bessel
