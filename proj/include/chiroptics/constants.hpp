#pragma once

#include <cmath>

namespace chiroptics {

inline constexpr double kPi = 3.14159265358979323846;

/// Physical constants bundle. CGS-Gaussian by default; the natural() set
/// puts c = hbar = k_B = 1 so unit-free invariants can be tested directly.
struct Constants {
    double c = 2.99792458e10;        // speed of light, cm/s
    double hbar = 1.054571817e-27;   // reduced Planck constant, erg s
    double k_boltzmann = 1.380649e-16; // erg/K

    static Constants cgs() { return Constants{}; }
    static Constants natural() { return Constants{1.0, 1.0, 1.0}; }
};

// Unit helpers. Lengths are cm internally; CLI surfaces use nm.
inline double nm_to_cm(double nm) { return nm * 1e-7; }
inline double cm_to_nm(double cm) { return cm * 1e7; }

/// rad/cm -> degree/dm (the customary polarimetry unit, 1 dm = 10 cm).
inline double rad_per_cm_to_deg_per_dm(double rad_per_cm) {
    return rad_per_cm * (180.0 / kPi) * 10.0;
}

/// Vacuum wavelength (cm) <-> angular frequency (rad/s), lambda = 2 pi c / omega.
inline double omega_from_lambda(double lambda_cm, const Constants& k = Constants::cgs()) {
    return 2.0 * kPi * k.c / lambda_cm;
}
inline double lambda_from_omega(double omega, const Constants& k = Constants::cgs()) {
    return 2.0 * kPi * k.c / omega;
}

} // namespace chiroptics
