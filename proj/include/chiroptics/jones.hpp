#pragma once

#include <complex>

#include "chiroptics/constants.hpp"

namespace chiroptics {

/**
 * Transverse polarized plane waves and their propagation through a
 * circularly birefringent (chiral) slab.
 *
 * Conventions, fixed once for the whole library:
 *  - Time factor exp(+i omega t - i k z); propagation along +z toward the
 *    reader, right-handed (x, y, z).
 *  - RCP amplitude ~ (x + i y): the real field turns counter-clockwise as
 *    seen by the reader. LCP ~ (x - i y) turns clockwise.
 *  - Complex indices n = n' + i chi with chi >= 0 for an absorbing medium;
 *    a circular component is attenuated by exp(-2 pi chi L / lambda) and
 *    phase-shifted by -2 pi n' L / lambda over a path L.
 *  - Rotation angle delta = pi (Re n_l - Re n_r) L / lambda; delta > 0 is a
 *    clockwise rotation of the polarization plane as seen by the reader.
 *  - Ellipticity angle psi = atan(tanh(2 pi chi' L / lambda)) with
 *    chi' = (chi_r - chi_l) / 2; psi > 0 when the right-circular component
 *    is absorbed more strongly.
 */

/// Transverse complex field amplitudes at fixed angular frequency.
struct JonesField {
    std::complex<double> e_x{0.0, 0.0};
    std::complex<double> e_y{0.0, 0.0};
    double omega = 0.0;  // rad/s, > 0
};

/// Circular decomposition: e_x = a_r + a_l, e_y = i (a_r - a_l).
struct CircularAmplitudes {
    std::complex<double> a_r{0.0, 0.0};  // right-circular, ~ (x + i y)
    std::complex<double> a_l{0.0, 0.0};  // left-circular,  ~ (x - i y)
};

/// Chiral slab: complex circular indices, path length and vacuum wavelength.
struct ChiralSlab {
    std::complex<double> n_l{1.0, 0.0};  // Im(n_l) = chi_l >= 0
    std::complex<double> n_r{1.0, 0.0};  // Im(n_r) = chi_r >= 0
    double length = 0.0;      // cm, >= 0
    double lambda_vac = 0.0;  // cm, > 0
};

/// Rotation + ellipse readout of a propagated, initially linear wave.
/// minor_axis is signed: tan(psi) = minor_axis / major_axis.
struct PolarizationReadout {
    double delta = 0.0;       // rad, clockwise-positive
    double psi = 0.0;         // rad
    double major_axis = 0.0;  // >= 0
    double minor_axis = 0.0;  // signed; |minor| <= major
};

void validate(const JonesField& field);
void validate(const ChiralSlab& slab);

/// a_r = (e_x - i e_y)/2, a_l = (e_x + i e_y)/2. Total function; exact
/// inverse of circular_compose.
CircularAmplitudes circular_decompose(const JonesField& field);
JonesField circular_compose(const CircularAmplitudes& amps, double omega);

/// Propagate through the slab: each circular component picks up
/// exp(-2 pi chi L / lambda) * exp(-i 2 pi n' L / lambda).
JonesField propagate(const JonesField& field, const ChiralSlab& slab);

/// delta = pi (Re n_l - Re n_r) L / lambda  (rad).
double rotation_angle(const ChiralSlab& slab);

/// Rotation per unit path, (pi/lambda)(Re n_l - Re n_r)  (rad/cm).
/// Throws validation_error if length == 0.
double rotatory_power(const ChiralSlab& slab);

/// Exact ellipticity angle atan(tanh(2 pi chi' L / lambda)).
double ellipticity_angle(const ChiralSlab& slab);

/// Small-argument form psi ~ (pi/lambda)(chi_r - chi_l) L. Exposed for
/// comparison; agrees with the exact form to second order.
double ellipticity_angle_small(const ChiralSlab& slab);

/// Ellipse axes of the wave propagated from a linearly polarized input.
/// Throws validation_error if the input is not linearly polarized
/// (circular amplitudes must agree in modulus to 1e-9 relative).
PolarizationReadout ellipse_axes(const JonesField& field_in, const ChiralSlab& slab);

/// Azimuth of the polarization ellipse extracted from the field itself,
/// clockwise-positive (same convention as rotation_angle), in (-pi/2, pi/2].
double polarization_azimuth(const JonesField& field);

/// Ellipticity angle extracted from the field: atan((|a_l| - |a_r|) / (|a_l| + |a_r|)).
double field_ellipticity_angle(const JonesField& field);

/// |e_x|^2 + |e_y|^2.
double intensity(const JonesField& field);

} // namespace chiroptics
