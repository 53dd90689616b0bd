#pragma once

#include <array>

#include "chiroptics/constants.hpp"
#include "chiroptics/molecule.hpp"

namespace chiroptics {

/**
 * First-order perturbation-theory evaluation of the induced dipoles, built
 * directly from the perturbed-state coefficients
 *
 *   a_km = <k|h|m> / (2 hbar (omega_mk - omega)),
 *   b_km = <k|h*|m> / (2 hbar (omega_mk + omega)),
 *   h = -(1/c)(dp/dt).A + (i omega/c) mu.(sigma x A),
 *   <k|dp/dt|m> = i omega_km <k|p|m>,
 *
 * with the isotropic 1/3 orientation average applied at the expectation
 * assembly. This path never forms the closed-form response parameters: it
 * is the independent check that the alpha/beta/gamma assembly in
 * response.hpp reproduces the microscopic dynamics.
 *
 * Phasors: fields and dipoles are reported as coefficients of exp(i omega t),
 * d(t) = Re{d exp(i omega t)}, for the real drive A(t) = A cos(omega t):
 *   E = -i (omega/c) A,  B = -i (omega/c) (sigma x A),  dB/dt = i omega B.
 */

/// Real transverse plane-wave drive: amplitude vector A, unit propagation
/// direction, angular frequency.
struct PlaneWaveDrive {
    std::array<double, 3> amplitude{0.0, 0.0, 0.0};   // statvolt/cm scale, real
    std::array<double, 3> direction{0.0, 0.0, 1.0};   // unit vector
    double omega = 0.0;                               // rad/s, > 0
};

struct InducedDipoles {
    cvec3 d{};   // electric dipole phasor
    cvec3 mu{};  // magnetic dipole phasor (mu^2 terms dropped)
};

/// Field phasors of the drive, for assembling the closed-form prediction.
struct DrivePhasors {
    cvec3 e{};
    cvec3 b{};
    cvec3 dbdt{};
    cvec3 dedt{};
};

DrivePhasors drive_phasors(const PlaneWaveDrive& drive, const Constants& k = Constants::cgs());

/// The oracle. Throws validation_error if the drive is not transverse or
/// direction is not unit; throws regime_error if omega sits within the
/// guard band of any |omega_mk| (first-order coefficients blow up).
InducedDipoles induced_dipoles_oracle(const MoleculeModel& model, std::size_t m,
                                      const PlaneWaveDrive& drive,
                                      const Constants& k = Constants::cgs());

} // namespace chiroptics
