#pragma once

#include <string>
#include <vector>

namespace chiroptics {

/// One verification check: symmetry and consistency laws evaluated on
/// built-in models. metric is the worst observed value, bound the limit it
/// must stay under (or over, for the expected-defect check).
struct VerifyCheck {
    std::string name;
    bool passed = false;
    double metric = 0.0;
    double bound = 0.0;
    std::string detail;
};

/// Runs the full built-in suite: rotational-strength antisymmetry, sum
/// rule, enantiomer antisymmetry, racemic cancellation, achiral null,
/// spectral extremes, perturbation-oracle equivalence, and the
/// truncated-model defect diagnostic.
std::vector<VerifyCheck> run_verification_suite();

} // namespace chiroptics
