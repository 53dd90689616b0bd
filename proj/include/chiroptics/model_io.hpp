#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chiroptics/molecule.hpp"
#include "chiroptics/response.hpp"

namespace chiroptics {

/**
 * Molecule model files: JSON with complex numbers as [re, im] pairs.
 *
 * {
 *   "name": "...",                          // optional
 *   "number_density": 1e18,                 // molecules/cm^3
 *   "states": [ {"energy": 0.0, "gamma": 0.0}, ... ],
 *   "transitions": [
 *     { "m": 0, "k": 1,
 *       "p":  [[re,im],[re,im],[re,im]],    // <m|p|k>,  esu cm
 *       "mu": [[re,im],[re,im],[re,im]] },  // <k|mu|m>, erg/G
 *     ...
 *   ],
 *   "weights": [ ... ],                     // optional explicit populations
 *   "mixture": [ {"fraction": 0.5, "mirror": false}, ... ]  // optional
 * }
 *
 * Hermitian completion is applied on load: each transition fills both
 * (m,k) and the conjugate (k,m) element. Listing both orientations is
 * allowed if they are conjugate-consistent. Diagonal entries (m == k)
 * carry permanent dipoles and must be real vectors.
 */

struct MixtureEntry {
    double fraction = 1.0;  // of number_density, >= 0
    bool mirror = false;    // use the parity image of the molecule
};

struct ModelFile {
    std::string name;
    MoleculeModel model;
    double number_density = 0.0;      // 0 when absent
    std::vector<double> weights;      // empty when absent
    std::vector<MixtureEntry> mixture;  // empty = single component, fraction 1
};

ModelFile load_model_file(const std::string& path);
ModelFile parse_model_json(const std::string& text);
void save_model_file(const ModelFile& file, const std::string& path);

} // namespace chiroptics
