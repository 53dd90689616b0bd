#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace chiroptics {

using cvec3 = std::array<std::complex<double>, 3>;

/// Bilinear dot of two complex 3-vectors (no conjugation).
std::complex<double> dot(const cvec3& a, const cvec3& b);
/// Sum of |component|^2.
double norm2(const cvec3& a);
cvec3 conj(const cvec3& a);

/**
 * Finite-dimensional molecular model: state energies, decay rates, and the
 * electric (p) and magnetic (mu) dipole operator matrix elements.
 *
 * Storage convention: p(m, k) holds <m|p|k> and mu(k, m) holds <k|mu|m>,
 * i.e. both matrices are indexed (row = bra, col = ket). Hermiticity
 * requires p(m, k) = conj(p(k, m)) componentwise, same for mu, so the
 * diagonals are real vectors.
 *
 * Units are CGS (erg, esu cm, erg/G, rad/s) unless the model is built in
 * natural units for property tests.
 */
class MoleculeModel {
public:
    MoleculeModel() = default;
    MoleculeModel(std::vector<double> energies, std::vector<double> gamma,
                  std::vector<cvec3> p_elements, std::vector<cvec3> mu_elements);

    std::size_t size() const { return energies_.size(); }

    double energy(std::size_t m) const { return energies_[m]; }
    double gamma(std::size_t m) const { return gamma_[m]; }
    const std::vector<double>& energies() const { return energies_; }
    const std::vector<double>& gammas() const { return gamma_; }

    const cvec3& p(std::size_t m, std::size_t k) const { return p_[m * size() + k]; }
    const cvec3& mu(std::size_t m, std::size_t k) const { return mu_[m * size() + k]; }

    /// omega_km = (E_k - E_m) / hbar.
    double omega_km(std::size_t k, std::size_t m, double hbar) const {
        return (energies_[k] - energies_[m]) / hbar;
    }

    /// Checks Hermiticity, real diagonals, dimension agreement, gamma >= 0.
    /// Throws validation_error naming the violated invariant and indices.
    void validate() const;

private:
    std::vector<double> energies_;  // erg
    std::vector<double> gamma_;     // rad/s, >= 0
    std::vector<cvec3> p_;          // esu cm
    std::vector<cvec3> mu_;         // erg/G
};

/// Builder: set elements pairwise and let the Hermitian partner be filled in.
class MoleculeModelBuilder {
public:
    explicit MoleculeModelBuilder(std::size_t n_states);

    MoleculeModelBuilder& energy(std::size_t m, double value);
    MoleculeModelBuilder& gamma(std::size_t m, double value);
    /// Sets <m|p|k> and the conjugate <k|p|m>.
    MoleculeModelBuilder& p_element(std::size_t m, std::size_t k, const cvec3& value);
    /// Sets <k|mu|m> and the conjugate <m|mu|k>.
    MoleculeModelBuilder& mu_element(std::size_t k, std::size_t m, const cvec3& value);

    MoleculeModel build() const;  // validates

private:
    std::size_t n_;
    std::vector<double> energies_, gamma_;
    std::vector<cvec3> p_, mu_;
};

/// R_km = Im{ <m|p|k> . <k|mu|m> }. Throws validation_error for k == m or
/// out-of-range indices.
double rotational_strength(const MoleculeModel& model, std::size_t k, std::size_t m);

/// |sum_k R_km|, a completeness diagnostic. Zero (to rounding) when the
/// operator matrices are complete over the model basis; generically nonzero
/// for truncated models. Never throws on large defects: it reports.
double sum_rule_defect(const MoleculeModel& model, std::size_t m);

/// Parity image: p elements negated, mu unchanged. An involution; flips
/// every R_km and hence the sign of beta; leaves alpha untouched.
MoleculeModel mirror_model(const MoleculeModel& model);

} // namespace chiroptics
