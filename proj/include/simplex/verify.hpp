#ifndef SIMPLEX_VERIFY_HPP
#define SIMPLEX_VERIFY_HPP

#include "simplex/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace simplex {

/// One measured quantity compared against a bound. `relation` records the
/// comparison that had to hold: "<=", ">", "==" or "true".
struct Check {
    std::string name;
    std::string relation;
    double value = 0.0;
    double limit = 0.0;
    bool passed = false;
};

struct VerificationRun {
    std::string suite;
    std::uint64_t seed = 0;
    int samples = 0; ///< resolved sample count the suite actually used
    Tolerance tolerance;
    bool pass = false;
    std::vector<Check> checks;
};

/// Suite identifiers accepted by run_verification.
const std::vector<std::string>& verification_ids();

/// Runs one property suite. `samples` <= 0 selects the suite default.
/// Reruns with the same arguments give identical results. Throws
/// std::invalid_argument for an unknown id.
VerificationRun run_verification(const std::string& id, std::uint64_t seed,
                                 int samples, const Tolerance& tol = {});

/// Numerical backbone checks: Gram round trips, volume agreement between the
/// bordered-determinant and difference-determinant routes, isometry
/// equivariance of every center, and the Fermat-Torricelli residual, each
/// over `samples` random simplices.
VerificationRun run_infrastructure_checks(std::uint64_t seed, int samples,
                                          const Tolerance& tol = {});

} // namespace simplex

#endif
