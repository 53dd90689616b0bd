#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "chiroptics/constants.hpp"
#include "chiroptics/molecule.hpp"

namespace chiroptics {

/**
 * Rosenfeld linear-response parameters and the macroscopic constitutive
 * pipeline built on them.
 *
 * For state m, with omega_km = (E_k - E_m)/hbar and
 * R_km = Im{<m|p|k>.<k|mu|m>}:
 *
 *   alpha_m = (2/3hbar) sum_k omega_km |<m|p|k>|^2 / (omega_km^2 - omega^2)
 *   beta_m  = (2c/3hbar) sum_k R_km / (omega_km^2 - omega^2)
 *   gamma_m = (2/3hbar) sum_k omega_km Re{<m|p|k>.<k|mu|m>} / (omega_km^2 - omega^2)
 *
 * The induced dipoles for a wave (E, B) are then
 *   d_m  = alpha_m E + gamma_m B - (beta_m/c) dB/dt
 *   mu_m = gamma_m E + (beta_m/c) dE/dt,
 * with the isotropic orientation average already folded into the 1/3.
 *
 * The resonant variant replaces each denominator by
 * omega_km^2 - omega^2 + i omega Gamma_km / 2, Gamma_km = Gamma_k + Gamma_m,
 * and reduces to the real forms as Gamma -> 0.
 */
struct ResponseParameters {
    std::complex<double> alpha{0.0, 0.0};  // cm^3
    std::complex<double> beta{0.0, 0.0};   // cm^3 s / rad  (CGS; rotatory-power convention)
    std::complex<double> gamma{0.0, 0.0};
    std::size_t state = 0;
};

/// Off-resonance (Gamma ignored). Requires |omega_km^2 - omega^2| >
/// 1e-6 * omega_km^2 for every k; throws regime_error pointing to the
/// resonant variant otherwise.
ResponseParameters response_parameters(const MoleculeModel& model, std::size_t m, double omega,
                                       const Constants& k = Constants::cgs());

/// Complex parameters with linewidth-regularized denominators. Throws
/// regime_error only on a true singularity (Gamma_km == 0 at omega == omega_km).
ResponseParameters response_parameters_resonant(const MoleculeModel& model, std::size_t m,
                                                double omega,
                                                const Constants& k = Constants::cgs());

/// Complex rotatory power of one state: Theta_m = (16 pi^3 / lambda^2) N_m beta_m.
/// Re is the rotation per unit length; -Im is the ellipticity per unit
/// length in the slab convention (see jones.hpp).
std::complex<double> rotatory_power_state(std::complex<double> beta_m, double number_density_m,
                                          double lambda_vac);

/// Thermal or explicitly weighted state populations over a model.
/// Explicit weights (normalized to 1) override temperature; with neither,
/// only the lowest-energy state is populated.
struct EnsembleSpec {
    std::optional<double> temperature;  // K, > 0
    std::vector<double> weights;        // empty, or per-state, summing to 1
    double number_density = 0.0;        // molecules/cm^3, > 0
};

std::vector<double> ensemble_weights(const MoleculeModel& model, const EnsembleSpec& ensemble,
                                     const Constants& k = Constants::cgs());

/// Population-weighted beta, then Theta = (16 pi^3/lambda^2) N beta.
/// Uses the resonant parameter path (exact off-resonant values at Gamma = 0).
std::complex<double> ensemble_rotatory_power(const MoleculeModel& model,
                                             const EnsembleSpec& ensemble, double omega,
                                             const Constants& k = Constants::cgs());

/// One species in a mixture.
struct MixtureComponent {
    double number_density = 0.0;          // molecules/cm^3, >= 0
    std::complex<double> beta{0.0, 0.0};
};

/// Theta = (16 pi^3/lambda^2) sum_r N_r beta_r.
std::complex<double> mixture_rotatory_power(const std::vector<MixtureComponent>& components,
                                            double lambda_vac);

/// Dense-medium (Lorentz local field) factor: multiply by (n^2 + 2)/3.
std::complex<double> dense_medium_correction(std::complex<double> rotatory_power, double n);

/// Macroscopic constitutive coefficients for number density N:
///   epsilon = 1 + 4 pi N alpha, eta = 4 pi N gamma, rho = 8 pi N beta.
struct MediumCoefficients {
    std::complex<double> epsilon{1.0, 0.0};
    std::complex<double> eta{0.0, 0.0};
    std::complex<double> rho{0.0, 0.0};
};

MediumCoefficients medium_coefficients(const ResponseParameters& params, double number_density);

/// Circular eigenmode indices of the chiral constitutive relations:
/// exact roots of n^2 = epsilon +/- (2 pi rho / lambda) n, the + branch
/// belonging to the left-circular mode, so n_l - n_r = 2 pi rho / lambda
/// and (pi/lambda)(n_l - n_r) = (2 pi^2/lambda^2) rho.
/// regime_ratio = |2 pi rho| / (lambda |sqrt(epsilon)| * |epsilon|)
/// measures the validity of the near-degenerate regime; regime_warning is
/// set beyond 10%. Throws regime_error when Re(epsilon) <= 0.
struct EigenIndices {
    std::complex<double> n_r{1.0, 0.0};
    std::complex<double> n_l{1.0, 0.0};
    bool regime_warning = false;
    double regime_ratio = 0.0;
};

EigenIndices eigen_indices(const MediumCoefficients& medium, double lambda_vac);

} // namespace chiroptics
