#include "chiroptics/molecule.hpp"

#include <cmath>
#include <string>

#include "chiroptics/errors.hpp"

namespace chiroptics {

std::complex<double> dot(const cvec3& a, const cvec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm2(const cvec3& a) {
    return std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]);
}

cvec3 conj(const cvec3& a) {
    return {std::conj(a[0]), std::conj(a[1]), std::conj(a[2])};
}

MoleculeModel::MoleculeModel(std::vector<double> energies, std::vector<double> gamma,
                             std::vector<cvec3> p_elements, std::vector<cvec3> mu_elements)
    : energies_(std::move(energies)),
      gamma_(std::move(gamma)),
      p_(std::move(p_elements)),
      mu_(std::move(mu_elements)) {
    validate();
}

namespace {

void check_hermitian(const std::vector<cvec3>& mat, std::size_t n, const char* name) {
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = m; k < n; ++k) {
            const cvec3& a = mat[m * n + k];
            const cvec3& b = mat[k * n + m];
            for (int j = 0; j < 3; ++j) {
                const double scale = std::abs(a[j]) + std::abs(b[j]);
                if (std::abs(a[j] - std::conj(b[j])) > 1e-10 * scale + 1e-300)
                    throw validation_error(std::string(name) + " matrix not Hermitian at (" +
                                           std::to_string(m) + "," + std::to_string(k) +
                                           ") component " + std::to_string(j));
            }
        }
    }
}

} // namespace

void MoleculeModel::validate() const {
    const std::size_t n = energies_.size();
    if (n == 0) throw validation_error("MoleculeModel: no states");
    if (gamma_.size() != n)
        throw validation_error("MoleculeModel: gamma size " + std::to_string(gamma_.size()) +
                               " != states " + std::to_string(n));
    if (p_.size() != n * n || mu_.size() != n * n)
        throw validation_error("MoleculeModel: dipole matrices must be n x n");
    for (std::size_t m = 0; m < n; ++m) {
        if (!std::isfinite(energies_[m]))
            throw validation_error("MoleculeModel: energy not finite at state " + std::to_string(m));
        if (!(gamma_[m] >= 0.0))
            throw validation_error("MoleculeModel: gamma must be >= 0 at state " + std::to_string(m));
    }
    check_hermitian(p_, n, "p");
    check_hermitian(mu_, n, "mu");
}

MoleculeModelBuilder::MoleculeModelBuilder(std::size_t n_states)
    : n_(n_states),
      energies_(n_states, 0.0),
      gamma_(n_states, 0.0),
      p_(n_states * n_states, cvec3{}),
      mu_(n_states * n_states, cvec3{}) {
    if (n_states == 0) throw validation_error("MoleculeModelBuilder: need at least one state");
}

MoleculeModelBuilder& MoleculeModelBuilder::energy(std::size_t m, double value) {
    if (m >= n_) throw validation_error("energy: state index out of range");
    energies_[m] = value;
    return *this;
}

MoleculeModelBuilder& MoleculeModelBuilder::gamma(std::size_t m, double value) {
    if (m >= n_) throw validation_error("gamma: state index out of range");
    gamma_[m] = value;
    return *this;
}

MoleculeModelBuilder& MoleculeModelBuilder::p_element(std::size_t m, std::size_t k,
                                                      const cvec3& value) {
    if (m >= n_ || k >= n_) throw validation_error("p_element: index out of range");
    p_[m * n_ + k] = value;
    p_[k * n_ + m] = conj(value);
    return *this;
}

MoleculeModelBuilder& MoleculeModelBuilder::mu_element(std::size_t k, std::size_t m,
                                                       const cvec3& value) {
    if (m >= n_ || k >= n_) throw validation_error("mu_element: index out of range");
    mu_[k * n_ + m] = value;
    mu_[m * n_ + k] = conj(value);
    return *this;
}

MoleculeModel MoleculeModelBuilder::build() const {
    return MoleculeModel(energies_, gamma_, p_, mu_);
}

double rotational_strength(const MoleculeModel& model, std::size_t k, std::size_t m) {
    const std::size_t n = model.size();
    if (k >= n || m >= n)
        throw validation_error("rotational_strength: state index out of range");
    if (k == m)
        throw validation_error("rotational_strength: k == m names no transition");
    return dot(model.p(m, k), model.mu(k, m)).imag();
}

double sum_rule_defect(const MoleculeModel& model, std::size_t m) {
    const std::size_t n = model.size();
    if (m >= n) throw validation_error("sum_rule_defect: state index out of range");
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        sum += dot(model.p(m, k), model.mu(k, m)).imag();  // k == m term is 0 (real diagonals)
    return std::abs(sum);
}

MoleculeModel mirror_model(const MoleculeModel& model) {
    const std::size_t n = model.size();
    std::vector<cvec3> p_neg(n * n);
    std::vector<cvec3> mu_same(n * n);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = 0; k < n; ++k) {
            const cvec3& pe = model.p(m, k);
            p_neg[m * n + k] = {-pe[0], -pe[1], -pe[2]};
            mu_same[m * n + k] = model.mu(m, k);
        }
    }
    return MoleculeModel(model.energies(), model.gammas(), std::move(p_neg), std::move(mu_same));
}

} // namespace chiroptics
