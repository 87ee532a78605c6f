#pragma once

#include <cstdint>
#include <string>

#include "qfrob/frob1.hpp"
#include "qfrob/report.hpp"

namespace qfrob {

struct SuiteOptions {
    int cells = 8;
    int ell = 1;
    double epsilon = 0.1;
    int step_div = 200;
    std::uint64_t seed = 1;
    int m = 1;
    int n = 1;
    bool fail_fast = false;
};

/// Lifts, homotopy equations, S3 symmetry, shift invariance, radii, and a seeded
/// batch of structural identities on random operations.
Report suite_verify_discrete(const SuiteOptions& o);
/// Frobenius and coassociativity tables of the two-dimensional model H•(S¹).
Report suite_homology_model(const SuiteOptions& o);
/// Frob₁ composition signs, associativity sweep and generator counts.
Report suite_frob1(const SuiteOptions& o);
/// Quasilocal cohomology dimensions for (cells, m, n, ell).
Report suite_qloc_dims(const SuiteOptions& o);
/// Smooth-model integrals for both bump shapes at (epsilon, step_div).
Report suite_derham(const SuiteOptions& o);
/// The genus-2 obstruction and its action on cohomology.
Report suite_obstruction(const SuiteOptions& o);
/// Every suite above; stops after the first failing one if fail_fast is set.
Report suite_all(const SuiteOptions& o);

/// "c·a⊗b + ..." with 1 and ω as factor names; "0" for the zero tensor.
std::string render(const HTensor& t);

}  // namespace qfrob
