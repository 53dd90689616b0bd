#include "chiroptics/response.hpp"

#include <cmath>
#include <string>

#include "chiroptics/errors.hpp"

namespace chiroptics {

namespace {

void check_state(const MoleculeModel& model, std::size_t m, const char* where) {
    if (m >= model.size())
        throw validation_error(std::string(where) + ": state index out of range");
}

constexpr double kResonanceGuard = 1e-6;  // |w_km^2 - w^2| > guard * w_km^2

} // namespace

ResponseParameters response_parameters(const MoleculeModel& model, std::size_t m, double omega,
                                       const Constants& kc) {
    check_state(model, m, "response_parameters");
    if (!(omega >= 0.0)) throw validation_error("response_parameters: omega must be >= 0");
    const std::size_t n = model.size();
    const double w2 = omega * omega;

    ResponseParameters out;
    out.state = m;
    double alpha = 0.0, beta_over_c = 0.0, gamma = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == m) continue;
        const double w_km = model.omega_km(k, m, kc.hbar);
        const double denom = w_km * w_km - w2;
        if (std::abs(denom) <= kResonanceGuard * w_km * w_km)
            throw regime_error("response_parameters: omega within the resonance guard of "
                               "transition (" + std::to_string(k) + "," + std::to_string(m) +
                               "); use response_parameters_resonant");
        const std::complex<double> z = dot(model.p(m, k), model.mu(k, m));
        alpha += w_km * norm2(model.p(m, k)) / denom;
        beta_over_c += z.imag() / denom;
        gamma += w_km * z.real() / denom;
    }
    const double pref = 2.0 / (3.0 * kc.hbar);
    out.alpha = pref * alpha;
    out.beta = pref * kc.c * beta_over_c;
    out.gamma = pref * gamma;
    return out;
}

ResponseParameters response_parameters_resonant(const MoleculeModel& model, std::size_t m,
                                                double omega, const Constants& kc) {
    check_state(model, m, "response_parameters_resonant");
    if (!(omega >= 0.0))
        throw validation_error("response_parameters_resonant: omega must be >= 0");
    const std::size_t n = model.size();
    const double w2 = omega * omega;

    ResponseParameters out;
    out.state = m;
    std::complex<double> alpha{}, beta_over_c{}, gamma{};
    for (std::size_t k = 0; k < n; ++k) {
        if (k == m) continue;
        const double w_km = model.omega_km(k, m, kc.hbar);
        const double gamma_km = model.gamma(k) + model.gamma(m);
        const std::complex<double> denom{w_km * w_km - w2, omega * gamma_km / 2.0};
        if (std::abs(denom) == 0.0)
            throw regime_error("response_parameters_resonant: exact resonance with "
                               "Gamma_km = 0 at transition (" + std::to_string(k) + "," +
                               std::to_string(m) + ")");
        const std::complex<double> z = dot(model.p(m, k), model.mu(k, m));
        alpha += w_km * norm2(model.p(m, k)) / denom;
        beta_over_c += z.imag() / denom;
        gamma += w_km * z.real() / denom;
    }
    const double pref = 2.0 / (3.0 * kc.hbar);
    out.alpha = pref * alpha;
    out.beta = pref * kc.c * beta_over_c;
    out.gamma = pref * gamma;
    return out;
}

std::complex<double> rotatory_power_state(std::complex<double> beta_m, double number_density_m,
                                          double lambda_vac) {
    if (!(number_density_m >= 0.0))
        throw validation_error("rotatory_power_state: number density must be >= 0");
    if (!(lambda_vac > 0.0))
        throw validation_error("rotatory_power_state: lambda_vac must be > 0");
    const double pref = 16.0 * kPi * kPi * kPi / (lambda_vac * lambda_vac);
    return pref * number_density_m * beta_m;
}

std::vector<double> ensemble_weights(const MoleculeModel& model, const EnsembleSpec& ensemble,
                                     const Constants& kc) {
    const std::size_t n = model.size();
    if (!ensemble.weights.empty()) {
        if (ensemble.weights.size() != n)
            throw validation_error("ensemble_weights: weight count != state count");
        double sum = 0.0;
        for (double w : ensemble.weights) {
            if (!(w >= 0.0)) throw validation_error("ensemble_weights: weights must be >= 0");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw validation_error("ensemble_weights: weights must sum to 1");
        if (sum == 0.0) throw validation_error("ensemble_weights: all weights zero");
        return ensemble.weights;
    }

    std::vector<double> w(n, 0.0);
    if (ensemble.temperature) {
        const double t = *ensemble.temperature;
        if (!(t > 0.0)) throw validation_error("ensemble_weights: temperature must be > 0");
        double e_min = model.energy(0);
        for (std::size_t m = 1; m < n; ++m) e_min = std::min(e_min, model.energy(m));
        double sum = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            w[m] = std::exp(-(model.energy(m) - e_min) / (kc.k_boltzmann * t));
            sum += w[m];
        }
        for (double& x : w) x /= sum;
        return w;
    }

    // default: zero-temperature limit, lowest-energy state(s) only
    double e_min = model.energy(0);
    for (std::size_t m = 1; m < n; ++m) e_min = std::min(e_min, model.energy(m));
    std::size_t count = 0;
    for (std::size_t m = 0; m < n; ++m)
        if (model.energy(m) == e_min) ++count;
    for (std::size_t m = 0; m < n; ++m)
        if (model.energy(m) == e_min) w[m] = 1.0 / static_cast<double>(count);
    return w;
}

std::complex<double> ensemble_rotatory_power(const MoleculeModel& model,
                                             const EnsembleSpec& ensemble, double omega,
                                             const Constants& kc) {
    if (!(ensemble.number_density > 0.0))
        throw validation_error("ensemble_rotatory_power: number density must be > 0");
    const std::vector<double> w = ensemble_weights(model, ensemble, kc);
    std::complex<double> beta{};
    for (std::size_t m = 0; m < model.size(); ++m) {
        if (w[m] == 0.0) continue;
        beta += w[m] * response_parameters_resonant(model, m, omega, kc).beta;
    }
    const double lambda = lambda_from_omega(omega, kc);
    return rotatory_power_state(beta, ensemble.number_density, lambda);
}

std::complex<double> mixture_rotatory_power(const std::vector<MixtureComponent>& components,
                                            double lambda_vac) {
    if (!(lambda_vac > 0.0))
        throw validation_error("mixture_rotatory_power: lambda_vac must be > 0");
    std::complex<double> n_beta{};
    for (const MixtureComponent& comp : components) {
        if (!(comp.number_density >= 0.0))
            throw validation_error("mixture_rotatory_power: number densities must be >= 0");
        n_beta += comp.number_density * comp.beta;
    }
    return (16.0 * kPi * kPi * kPi / (lambda_vac * lambda_vac)) * n_beta;
}

std::complex<double> dense_medium_correction(std::complex<double> rotatory_power, double n) {
    if (!(n >= 1.0)) throw validation_error("dense_medium_correction: n must be >= 1");
    return rotatory_power * ((n * n + 2.0) / 3.0);
}

MediumCoefficients medium_coefficients(const ResponseParameters& params, double number_density) {
    if (!(number_density >= 0.0))
        throw validation_error("medium_coefficients: number density must be >= 0");
    MediumCoefficients med;
    med.epsilon = 1.0 + 4.0 * kPi * number_density * params.alpha;
    med.eta = 4.0 * kPi * number_density * params.gamma;
    med.rho = 8.0 * kPi * number_density * params.beta;
    return med;
}

EigenIndices eigen_indices(const MediumCoefficients& medium, double lambda_vac) {
    if (!(lambda_vac > 0.0)) throw validation_error("eigen_indices: lambda_vac must be > 0");
    if (!(medium.epsilon.real() > 0.0))
        throw regime_error("eigen_indices: Re(epsilon) must be > 0");

    // n^2 = epsilon +/- (2 pi rho / lambda) n  ->  n = +/- p + sqrt(epsilon + p^2),
    // p = pi rho / lambda. The + branch is the left-circular mode.
    const std::complex<double> p = kPi * medium.rho / lambda_vac;
    const std::complex<double> root = std::sqrt(medium.epsilon + p * p);

    EigenIndices out;
    out.n_l = root + p;
    out.n_r = root - p;
    // |2 pi rho / lambda_n| / |epsilon| with lambda_n ~ lambda / sqrt(epsilon)
    out.regime_ratio = std::abs(2.0 * p * std::sqrt(medium.epsilon)) / std::abs(medium.epsilon);
    out.regime_warning = out.regime_ratio > 0.1;
    return out;
}

} // namespace chiroptics
