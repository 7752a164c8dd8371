// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

namespace wgcav::bessel {

using cdbl = std::complex<double>;

/// Spherical Bessel j_l, Hankel h1_l = j_l + i y_l and their derivatives with
/// respect to the argument, evaluated at complex z.
///
/// j is computed by a continued-fraction-seeded downward recurrence (stable
/// for any l), h1 by upward recurrence from its closed forms (h1 is never
/// the minimal solution going up, and the direct route avoids the j + i y
/// cancellation at large |Im z|). Values carry >= 10 significant
/// digits for |z| <= 1e3 and l <= 500 wherever the result is representable
/// in double; outside that (deep evanescent underflow of j, or |Im z| large
/// enough to overflow the elementary seeds) `out_of_range` is set.
struct SphericalPair {
    cdbl j{};
    cdbl jp{};
    cdbl h1{};
    cdbl h1p{};
    bool out_of_range = false;
};

SphericalPair spherical_bessel_pair(int l, cdbl z);

/// Riccati forms psi(z) = z j_l(z), dpsi = d/dz[z j_l(z)] and the Hankel
/// analogues chi(z) = z h1_l(z), dchi. Convenience for the characteristic
/// equation of a dielectric sphere.
struct RiccatiPair {
    cdbl psi{}, dpsi{};   // z j_l(z), [z j_l(z)]'
    cdbl chi{}, dchi{};   // z h1_l(z), [z h1_l(z)]'
    bool out_of_range = false;
};

RiccatiPair riccati_pair(int l, cdbl z);

} // namespace wgcav::bessel
