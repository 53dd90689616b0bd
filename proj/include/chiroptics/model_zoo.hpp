#pragma once

#include <cstdint>
#include <random>

#include "chiroptics/molecule.hpp"

namespace chiroptics {

/**
 * Built-in molecule models and randomized generators for the verification
 * suite and property tests. Natural units (hbar = c = 1) unless stated.
 *
 * "Complete" random models draw each Cartesian component pair (p_j, mu_j)
 * from a shared random eigenbasis, so the componentwise products p_j mu_j
 * are Hermitian — the structure the physical operators have (p_x commutes
 * with mu_x, which involves only y, z coordinates and momenta). That is
 * what makes sum_k R_km vanish; independently drawn Hermitian matrices do
 * not satisfy the sum rule.
 */

/// Two-state model with one transition at omega0: <0|p|1> = (i d, 0, 0),
/// <1|mu|0> = (mu0, 0, 0), so R_{1,0} = d * mu0. Not sum-rule complete.
MoleculeModel two_state_chiral(double omega0, double d, double mu0, double gamma0 = 0.0,
                               double hbar = 1.0);

/// Deterministic 3-state chiral fixture (complete construction, fixed seed).
MoleculeModel three_state_chiral(double hbar = 1.0);

/// All dipole vectors real: every R_km = 0 (a symmetry plane exists).
MoleculeModel achiral_model(std::uint64_t seed = 7, std::size_t n_states = 4, double hbar = 1.0);

/// Independently random Hermitian p, mu (antisymmetry holds; sum rule does not).
MoleculeModel random_hermitian_model(std::mt19937_64& rng, std::size_t n_states,
                                     double hbar = 1.0);

/// Componentwise-commuting random model; sum rule holds to rounding.
/// Chiral (nonzero R) generically for n_states >= 3.
MoleculeModel random_complete_model(std::mt19937_64& rng, std::size_t n_states, double hbar = 1.0,
                                    double gamma_scale = 0.0);

/// Remove the highest state (breaks completeness; sum rule defect appears).
MoleculeModel truncate_model(const MoleculeModel& model);

} // namespace chiroptics
