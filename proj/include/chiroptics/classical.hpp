#pragma once

#include <utility>

#include "chiroptics/constants.hpp"

namespace chiroptics {

/**
 * Classical single-electron Lorentz model: magnetic circular birefringence
 * (Faraday effect) and the dilute/dense susceptibility relations.
 * No damping; resonant behavior is handled quantum-mechanically elsewhere.
 */

/// Bound-electron gas: N atoms/cm^3, natural frequency omega0, charge
/// magnitude and mass of the oscillating electron (CGS).
struct LorentzGas {
    double number_density = 0.0;  // atoms/cm^3, > 0
    double omega0 = 0.0;          // rad/s, > 0
    double charge = 4.80320425e-10;  // esu, magnitude
    double mass = 9.1093837015e-28;  // g
};

/// One magneto-optic evaluation point: incident frequency and static field
/// along the propagation axis (signed; co-propagating positive).
struct MagnetoOpticQuery {
    double omega = 0.0;    // rad/s, > 0
    double b_field = 0.0;  // gauss, signed
};

void validate(const LorentzGas& gas);
void validate(const MagnetoOpticQuery& q);

/// Circular refraction indexes
///   n_{l,r}^2 = 1 + 4 pi (N e^2/m) / (omega0^2 - omega^2 +/- e B omega/(m c)),
/// + for LCP. The Lorentz-force term carries 1/c (Gaussian units).
/// Throws regime_error on resonance (denominator within 1e-9*omega0^2 of
/// zero) or in the evanescent regime (n^2 <= 0).
std::pair<double, double> faraday_indices(const LorentzGas& gas, const MagnetoOpticQuery& q,
                                          const Constants& k = Constants::cgs());

/// (pi/lambda)(n_l - n_r), rad/cm. Negative for B > 0, omega < omega0,
/// co-propagating geometry (the medium is levorotatory).
double faraday_rotatory_power(const LorentzGas& gas, const MagnetoOpticQuery& q,
                              double lambda_vac, const Constants& k = Constants::cgs());

/// alpha = (3 / 4 pi N) (eps - 1)/(eps + 2), cm^3.
double clausius_mossotti(double epsilon, double number_density);

/// Dilute limit eps = 1 + 4 pi N alpha. Throws regime_error when
/// 4 pi N alpha / 3 >= 1. dilute_parameter() exposes that expansion
/// parameter so callers can warn above ~0.1.
double dilute_epsilon(double number_density, double alpha);
double dilute_index(double number_density, double alpha);  // sqrt(eps)
double dilute_parameter(double number_density, double alpha);

} // namespace chiroptics
