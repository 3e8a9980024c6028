#pragma once

#include "casimir/algebra.hpp"
#include "casimir/report.hpp"

namespace casimir {

enum class SuiteLevel { Fast, Full };

/// Runs the whole identity/projector/dimension battery for one algebra and
/// reports every outcome. Checks never abort the suite; anything
/// inapplicable is marked skipped with a machine-readable reason. Full level
/// adds the brute-force dual routes and ad-invariance commutators (gated to
/// n <= 6).
VerificationRecord run_suite(const AlgebraSpec& spec, SuiteLevel level);

/// so(n) <-> sp(n) duality: the dimension polynomials evaluated at M = n and
/// M = -n must reproduce the traces of the actually-constructed so(n) and
/// sp(n) projector systems, and the frozen reference rows where available.
VerificationRecord run_duality_check(int n);

}  // namespace casimir
