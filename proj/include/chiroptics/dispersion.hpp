#pragma once

#include <complex>
#include <vector>

#include "chiroptics/constants.hpp"

namespace chiroptics {

/**
 * Wavelength-domain dispersion laws and the Kramers-Kronig machinery tying
 * rotation (Re) and circular dichroism (Im) together.
 *
 * The complex observable is Theta(lambda) = alpha + i psi per unit length,
 * with psi > 0 for a positive Cotton band. A single band:
 *
 *   alpha(lambda) = A (lambda^2 - lambda0^2) / D(lambda)
 *   psi(lambda)   = A g lambda lambda0 / D(lambda)
 *   D = (lambda^2 - lambda0^2)^2 + g^2 lambda^2 lambda0^2
 *
 * This is exactly the resonant single-transition response written in
 * lambda = 2 pi c / omega, provided
 *   A = (8 pi / 3 c hbar) N R0 lambda0^2,   g = Gamma0 lambda0 / (4 pi c),
 * which cotton_band_from_transition computes.
 */
struct CottonBand {
    double amplitude = 0.0;  // A, rad cm; sign = sign of R0
    double lambda0 = 0.0;    // resonance wavelength, cm, > 0
    double g = 0.0;          // dimensionless width, >= 0
};

void validate(const CottonBand& band);

/// Band parameters from a single molecular transition (R0 in CGS,
/// Gamma0 = Gamma_k + Gamma_m in rad/s).
CottonBand cotton_band_from_transition(double number_density, double rotational_strength,
                                       double lambda0, double gamma0,
                                       const Constants& k = Constants::cgs());

/// alpha + i psi of one band at wavelength lambda (cm).
std::complex<double> cotton_lineshape(const CottonBand& band, double lambda);

/// Far-from-resonance rotation sum_k A_k / (lambda^2 - lambda0k^2) (Drude).
/// Throws regime_error within 1e-9 relative of any band wavelength.
struct DrudeBand {
    double amplitude = 0.0;
    double lambda0 = 0.0;
};
double drude_rotation(const std::vector<DrudeBand>& bands, double lambda);

/// Long-wavelength limit A / lambda^2 (Biot).
double biot_limit(double amplitude, double lambda);

/// Samples of a complex observable over a strictly increasing abscissa.
/// The KK routines require an angular-frequency abscissa.
struct SpectrumGrid {
    enum class Domain { omega, lambda };
    Domain domain = Domain::omega;
    std::vector<double> abscissa;
    std::vector<std::complex<double>> values;
};

void validate(const SpectrumGrid& grid);

enum class KKDirection { imag_from_real, real_from_imag };

/// Kramers-Kronig transform on an omega grid:
///   Re(w) - Re(inf) = (2/pi) PV int w' Im(w') / (w'^2 - w^2) dw'
///   Im(w) = -(2w/pi) PV int (Re(w') - Re(inf)) / (w'^2 - w^2) dw'
/// Quadrature: symmetric exclusion window of one local spacing around the
/// pole, analytic local contribution, trapezoid elsewhere, extrapolated
/// tails. The high-frequency asymptote of Re is fitted from the last grid
/// points. Output covers the interior abscissa (first and last point
/// dropped); the untouched part of each value is copied through.
struct KKResult {
    SpectrumGrid grid;
    double asymptote = 0.0;          // fitted Re(inf)
    double truncation_estimate = 0.0;  // rms of tail contributions / rms of transformed part
};

KKResult kramers_kronig(const SpectrumGrid& grid, KKDirection direction);

/// rms relative mismatch between Im and the KK transform of Re:
///   residual = rms(Im - KK[Re]) / max(rms(Im), rms(KK[Re])).
/// A causal, complete spectrum scores below the reported truncation estimate
/// plus quadrature error; ~1 for a broken (non-causal) pair.
struct KKConsistency {
    double residual = 0.0;
    double truncation_estimate = 0.0;
};

KKConsistency kk_consistency_residual(const SpectrumGrid& grid);

} // namespace chiroptics
