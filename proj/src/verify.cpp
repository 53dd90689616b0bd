#include "chiroptics/verify.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "chiroptics/constants.hpp"
#include "chiroptics/model_zoo.hpp"
#include "chiroptics/molecule.hpp"
#include "chiroptics/perturbation.hpp"
#include "chiroptics/response.hpp"

namespace chiroptics {

namespace {

const Constants kNat = Constants::natural();

VerifyCheck antisymmetry_check() {
    std::mt19937_64 rng(101);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng() % 7);  // 2..8
        const MoleculeModel model = random_hermitian_model(rng, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t m = 0; m < n; ++m) {
                if (k == m) continue;
                worst = std::max(worst, std::abs(rotational_strength(model, k, m) +
                                                 rotational_strength(model, m, k)));
            }
    }
    return {"rotational-strength antisymmetry R_km = -R_mk", worst <= 1e-14, worst, 1e-14,
            "100 random Hermitian models, 2-8 states"};
}

VerifyCheck sum_rule_check() {
    std::mt19937_64 rng(202);
    double worst = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng() % 6);  // 3..8
        const MoleculeModel model = random_complete_model(rng, n);
        for (std::size_t m = 0; m < n; ++m) {
            double max_r = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != m) max_r = std::max(max_r, std::abs(rotational_strength(model, k, m)));
            const double defect = sum_rule_defect(model, m);
            worst = std::max(worst, defect / (max_r + 1e-30));
        }
    }
    return {"sum rule |sum_k R_km| = 0 on complete models", worst <= 1e-12, worst, 1e-12,
            "60 componentwise-commuting random models, 3-8 states"};
}

VerifyCheck enantiomer_check() {
    std::mt19937_64 rng(303);
    const MoleculeModel model = random_complete_model(rng, 4);
    const MoleculeModel mirror = mirror_model(model);
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) {
        const double omega = 0.011 + 0.37 * i / 63.0;  // below the first gap
        const auto a = response_parameters(model, 0, omega, kNat);
        const auto b = response_parameters(mirror, 0, omega, kNat);
        const double scale = std::abs(a.beta) + 1e-30;
        worst = std::max(worst, std::abs(a.beta + b.beta) / scale);
        worst = std::max(worst, std::abs(a.alpha - b.alpha) / (std::abs(a.alpha) + 1e-30));
    }
    return {"enantiomer antisymmetry beta(mirror) = -beta, alpha invariant", worst <= 1e-14,
            worst, 1e-14, "64-point omega grid"};
}

VerifyCheck racemic_check() {
    std::mt19937_64 rng(404);
    const MoleculeModel model = random_complete_model(rng, 4);
    const MoleculeModel mirror = mirror_model(model);
    const double omega = 0.23;
    const double lambda = lambda_from_omega(omega, kNat);
    const std::complex<double> beta = response_parameters(model, 0, omega, kNat).beta;
    const std::complex<double> beta_m = response_parameters(mirror, 0, omega, kNat).beta;
    const std::complex<double> theta =
        mixture_rotatory_power({{0.5, beta}, {0.5, beta_m}}, lambda);
    const double metric = std::abs(theta);
    return {"racemic 50/50 mixture rotatory power = 0", metric == 0.0, metric, 0.0,
            "exact cancellation required"};
}

VerifyCheck achiral_check() {
    const MoleculeModel model = achiral_model();
    double worst = 0.0;
    for (std::size_t k = 0; k < model.size(); ++k)
        for (std::size_t m = 0; m < model.size(); ++m)
            if (k != m) worst = std::max(worst, std::abs(rotational_strength(model, k, m)));
    const std::complex<double> beta = response_parameters(model, 0, 0.31, kNat).beta;
    worst = std::max(worst, std::abs(beta));
    return {"achiral model: every R_km = 0 and beta = 0", worst == 0.0, worst, 0.0,
            "all-real dipole vectors"};
}

VerifyCheck spectral_extremes_check() {
    const MoleculeModel model = three_state_chiral();
    const double omega01 = model.omega_km(1, 0, kNat.hbar);
    const double lambda0 = lambda_from_omega(omega01, kNat);
    const double density = 1.0;

    auto alpha_rot = [&](double lambda) {
        const double omega = omega_from_lambda(lambda, kNat);
        const auto rp = response_parameters_resonant(model, 0, omega, kNat);
        return std::abs(rotatory_power_state(rp.beta, density, lambda).real());
    };

    double peak = 0.0;
    const int npts = 3001;
    for (int i = 0; i < npts; ++i) {
        const double lambda = lambda0 * std::pow(10.0, -3.0 + 6.0 * i / (npts - 1.0));
        peak = std::max(peak, alpha_rot(lambda));
    }
    const double low = alpha_rot(1e-3 * lambda0);
    const double high = alpha_rot(1e3 * lambda0);
    const double metric = std::max(low, high) / peak;
    return {"spectral extremes: |rotation| vanishes at both ends", metric < 1e-4, metric, 1e-4,
            "lambda from 1e-3 to 1e3 of the principal band"};
}

VerifyCheck oracle_check() {
    std::mt19937_64 rng(505);
    double worst = 0.0;
    for (int trial = 0; trial < 24; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng() % 4);  // 3..6
        const MoleculeModel model = random_complete_model(rng, n);
        const std::size_t m = rng() % n;

        PlaneWaveDrive drive;
        drive.omega = 0.43;  // clear of all gaps (>= 0.85 spacing)
        drive.direction = {0.0, 0.0, 1.0};
        drive.amplitude = {0.7, -0.4, 0.0};

        const InducedDipoles oracle = induced_dipoles_oracle(model, m, drive, kNat);
        const auto rp = response_parameters(model, m, drive.omega, kNat);
        const DrivePhasors ph = drive_phasors(drive, kNat);

        cvec3 d_pred{}, mu_pred{};
        for (int j = 0; j < 3; ++j) {
            d_pred[j] = rp.alpha * ph.e[j] + rp.gamma * ph.b[j] - (rp.beta / kNat.c) * ph.dbdt[j];
            mu_pred[j] = rp.gamma * ph.e[j] + (rp.beta / kNat.c) * ph.dedt[j];
        }
        double scale_d = 0.0, scale_mu = 0.0, err_d = 0.0, err_mu = 0.0;
        for (int j = 0; j < 3; ++j) {
            scale_d = std::max(scale_d, std::abs(oracle.d[j]));
            scale_mu = std::max(scale_mu, std::abs(oracle.mu[j]));
            err_d = std::max(err_d, std::abs(oracle.d[j] - d_pred[j]));
            err_mu = std::max(err_mu, std::abs(oracle.mu[j] - mu_pred[j]));
        }
        worst = std::max(worst, err_d / (scale_d + 1e-30));
        worst = std::max(worst, err_mu / (scale_mu + 1e-30));
    }
    return {"perturbation oracle matches response-parameter assembly", worst <= 1e-8, worst,
            1e-8, "24 random complete models, 3-6 states"};
}

VerifyCheck truncation_check() {
    std::mt19937_64 rng(606);
    const MoleculeModel model = random_complete_model(rng, 5);
    const MoleculeModel cut = truncate_model(model);
    double max_r = 0.0;
    for (std::size_t k = 1; k < cut.size(); ++k)
        max_r = std::max(max_r, std::abs(rotational_strength(cut, k, 0)));
    const double defect = sum_rule_defect(cut, 0);
    const double metric = defect / (max_r + 1e-30);
    return {"truncated model reports a sum-rule defect", metric > 1e-6, metric, 1e-6,
            "defect expected once a state is removed"};
}

} // namespace

std::vector<VerifyCheck> run_verification_suite() {
    return {antisymmetry_check(), sum_rule_check(),      enantiomer_check(),
            racemic_check(),      achiral_check(),       spectral_extremes_check(),
            oracle_check(),       truncation_check()};
}

} // namespace chiroptics
