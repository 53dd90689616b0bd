#include "chiroptics/model_zoo.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "chiroptics/errors.hpp"

namespace chiroptics {

namespace {

using cmat = std::vector<std::complex<double>>;  // n x n row-major

// Gram-Schmidt a random complex matrix into a unitary.
cmat random_unitary(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<std::complex<double>>> cols(n, std::vector<std::complex<double>>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) cols[c][r] = {gauss(rng), gauss(rng)};
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            std::complex<double> proj{};
            for (std::size_t r = 0; r < n; ++r) proj += std::conj(cols[prev][r]) * cols[c][r];
            for (std::size_t r = 0; r < n; ++r) cols[c][r] -= proj * cols[prev][r];
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < n; ++r) norm += std::norm(cols[c][r]);
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < n; ++r) cols[c][r] /= norm;
    }
    cmat u(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) u[r * n + c] = cols[c][r];
    return u;
}

// U diag(lambda) U^dagger, re-symmetrized against rounding.
cmat spectral_hermitian(const cmat& u, const std::vector<double>& lambda, std::size_t n) {
    cmat h(n * n, std::complex<double>{});
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            std::complex<double> s{};
            for (std::size_t a = 0; a < n; ++a)
                s += u[r * n + a] * lambda[a] * std::conj(u[c * n + a]);
            h[r * n + c] = s;
        }
    for (std::size_t r = 0; r < n; ++r) {
        h[r * n + r] = h[r * n + r].real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const std::complex<double> avg = 0.5 * (h[r * n + c] + std::conj(h[c * n + r]));
            h[r * n + c] = avg;
            h[c * n + r] = std::conj(avg);
        }
    }
    return h;
}

std::vector<double> spread_energies(std::mt19937_64& rng, std::size_t n, double hbar) {
    std::uniform_real_distribution<double> jitter(0.85, 1.15);
    std::vector<double> e(n, 0.0);
    for (std::size_t m = 1; m < n; ++m)
        e[m] = e[m - 1] + hbar * jitter(rng);  // distinct gaps near 1
    return e;
}

MoleculeModel assemble(const std::vector<double>& energies, const std::vector<double>& gammas,
                       const cmat px, const cmat py, const cmat pz, const cmat mx, const cmat my,
                       const cmat mz) {
    const std::size_t n = energies.size();
    std::vector<cvec3> p(n * n), mu(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        p[i] = {px[i], py[i], pz[i]};
        mu[i] = {mx[i], my[i], mz[i]};
    }
    return MoleculeModel(energies, gammas, std::move(p), std::move(mu));
}

} // namespace

MoleculeModel two_state_chiral(double omega0, double d, double mu0, double gamma0, double hbar) {
    if (!(omega0 > 0.0)) throw validation_error("two_state_chiral: omega0 must be > 0");
    MoleculeModelBuilder b(2);
    b.energy(0, 0.0).energy(1, hbar * omega0);
    b.gamma(0, 0.0).gamma(1, gamma0);
    b.p_element(0, 1, {std::complex<double>{0.0, d}, 0.0, 0.0});   // <0|p|1>
    b.mu_element(1, 0, {std::complex<double>{mu0, 0.0}, 0.0, 0.0});  // <1|mu|0>
    return b.build();
}

MoleculeModel random_complete_model(std::mt19937_64& rng, std::size_t n_states, double hbar,
                                    double gamma_scale) {
    if (n_states < 2) throw validation_error("random_complete_model: need >= 2 states");
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t n = n_states;
    cmat comp[6];
    for (int j = 0; j < 3; ++j) {
        const cmat u = random_unitary(rng, n);
        std::vector<double> lp(n), lm(n);
        for (std::size_t a = 0; a < n; ++a) {
            lp[a] = gauss(rng);
            lm[a] = gauss(rng);
        }
        comp[j] = spectral_hermitian(u, lp, n);
        comp[3 + j] = spectral_hermitian(u, lm, n);
    }
    const std::vector<double> e = spread_energies(rng, n, hbar);
    std::vector<double> g(n, 0.0);
    if (gamma_scale > 0.0) {
        std::uniform_real_distribution<double> gdist(0.5 * gamma_scale, gamma_scale);
        for (std::size_t m = 1; m < n; ++m) g[m] = gdist(rng);
    }
    return assemble(e, g, comp[0], comp[1], comp[2], comp[3], comp[4], comp[5]);
}

MoleculeModel random_hermitian_model(std::mt19937_64& rng, std::size_t n_states, double hbar) {
    if (n_states < 2) throw validation_error("random_hermitian_model: need >= 2 states");
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t n = n_states;
    auto hermitian = [&]() {
        cmat h(n * n);
        for (std::size_t r = 0; r < n; ++r) {
            h[r * n + r] = gauss(rng);
            for (std::size_t c = r + 1; c < n; ++c) {
                h[r * n + c] = {gauss(rng), gauss(rng)};
                h[c * n + r] = std::conj(h[r * n + c]);
            }
        }
        return h;
    };
    const std::vector<double> e = spread_energies(rng, n, hbar);
    return assemble(e, std::vector<double>(n, 0.0), hermitian(), hermitian(), hermitian(),
                    hermitian(), hermitian(), hermitian());
}

MoleculeModel three_state_chiral(double hbar) {
    std::mt19937_64 rng(0xC0770Au);
    return random_complete_model(rng, 3, hbar, 1e-3);
}

MoleculeModel achiral_model(std::uint64_t seed, std::size_t n_states, double hbar) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t n = n_states;
    auto real_symmetric = [&]() {
        cmat h(n * n);
        for (std::size_t r = 0; r < n; ++r) {
            h[r * n + r] = gauss(rng);
            for (std::size_t c = r + 1; c < n; ++c) {
                h[r * n + c] = gauss(rng);
                h[c * n + r] = h[r * n + c];
            }
        }
        return h;
    };
    const std::vector<double> e = spread_energies(rng, n, hbar);
    return assemble(e, std::vector<double>(n, 0.0), real_symmetric(), real_symmetric(),
                    real_symmetric(), real_symmetric(), real_symmetric(), real_symmetric());
}

MoleculeModel truncate_model(const MoleculeModel& model) {
    const std::size_t n = model.size();
    if (n < 3) throw validation_error("truncate_model: need >= 3 states to stay a model");
    const std::size_t m = n - 1;
    std::vector<double> e(model.energies().begin(), model.energies().begin() + m);
    std::vector<double> g(model.gammas().begin(), model.gammas().begin() + m);
    std::vector<cvec3> p(m * m), mu(m * m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            p[r * m + c] = model.p(r, c);
            mu[r * m + c] = model.mu(r, c);
        }
    return MoleculeModel(std::move(e), std::move(g), std::move(p), std::move(mu));
}

} // namespace chiroptics
