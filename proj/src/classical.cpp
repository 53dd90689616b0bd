#include "chiroptics/classical.hpp"

#include <cmath>

#include "chiroptics/errors.hpp"

namespace chiroptics {

void validate(const LorentzGas& gas) {
    if (!(gas.number_density > 0.0)) throw validation_error("LorentzGas: number_density must be > 0");
    if (!(gas.omega0 > 0.0)) throw validation_error("LorentzGas: omega0 must be > 0");
    if (!(gas.charge > 0.0)) throw validation_error("LorentzGas: charge magnitude must be > 0");
    if (!(gas.mass > 0.0)) throw validation_error("LorentzGas: mass must be > 0");
}

void validate(const MagnetoOpticQuery& q) {
    if (!(q.omega > 0.0)) throw validation_error("MagnetoOpticQuery: omega must be > 0");
    if (!std::isfinite(q.b_field)) throw validation_error("MagnetoOpticQuery: b_field must be finite");
}

namespace {

double index_from_denominator(const LorentzGas& gas, double denominator) {
    const double tol = 1e-9 * gas.omega0 * gas.omega0;
    if (std::abs(denominator) <= tol)
        throw regime_error("faraday_indices: resonance, omega too close to the "
                           "field-shifted natural frequency");
    const double n2 = 1.0 + 4.0 * kPi * gas.number_density * gas.charge * gas.charge /
                                (gas.mass * denominator);
    if (n2 <= 0.0)
        throw regime_error("faraday_indices: evanescent regime, n^2 <= 0");
    return std::sqrt(n2);
}

} // namespace

std::pair<double, double> faraday_indices(const LorentzGas& gas, const MagnetoOpticQuery& q,
                                          const Constants& k) {
    validate(gas);
    validate(q);
    const double base = gas.omega0 * gas.omega0 - q.omega * q.omega;
    const double magnetic = gas.charge * q.b_field * q.omega / (gas.mass * k.c);
    const double n_l = index_from_denominator(gas, base + magnetic);
    const double n_r = index_from_denominator(gas, base - magnetic);
    return {n_l, n_r};
}

double faraday_rotatory_power(const LorentzGas& gas, const MagnetoOpticQuery& q,
                              double lambda_vac, const Constants& k) {
    if (!(lambda_vac > 0.0)) throw validation_error("faraday_rotatory_power: lambda_vac must be > 0");
    const auto [n_l, n_r] = faraday_indices(gas, q, k);
    return (kPi / lambda_vac) * (n_l - n_r);
}

double clausius_mossotti(double epsilon, double number_density) {
    if (!(number_density > 0.0))
        throw validation_error("clausius_mossotti: number_density must be > 0");
    if (std::abs(epsilon + 2.0) < 1e-12 * std::abs(epsilon))
        throw regime_error("clausius_mossotti: singular at epsilon = -2");
    if (!(epsilon > 0.0))
        throw validation_error("clausius_mossotti: epsilon must be > 0");
    return (3.0 / (4.0 * kPi * number_density)) * (epsilon - 1.0) / (epsilon + 2.0);
}

double dilute_parameter(double number_density, double alpha) {
    return 4.0 * kPi * number_density * alpha / 3.0;
}

double dilute_epsilon(double number_density, double alpha) {
    if (!(number_density > 0.0))
        throw validation_error("dilute_epsilon: number_density must be > 0");
    if (dilute_parameter(number_density, alpha) >= 1.0)
        throw regime_error("dilute_epsilon: 4 pi N alpha / 3 >= 1, outside the "
                           "dilute expansion");
    return 1.0 + 4.0 * kPi * number_density * alpha;
}

double dilute_index(double number_density, double alpha) {
    return std::sqrt(dilute_epsilon(number_density, alpha));
}

} // namespace chiroptics
