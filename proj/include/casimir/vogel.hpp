#pragma once

#include <map>
#include <string>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/projectors.hpp"
#include "casimir/report.hpp"

namespace casimir {

/// One piece of ad x ad in the universal description. c_hat = c2/2 - 1 is the
/// split-Casimir eigenvalue on the piece.
struct UniversalPiece {
  std::string label;  // T0, Y2a, Y2b, Y2g, ad, X2
  Rational dim, c2, c_hat;
};

struct UniversalDecomposition {
  VogelPoint point;
  std::vector<UniversalPiece> pieces;  // order: T0, Y2a, Y2b, Y2g, ad, X2
};

/// Dimensions and Casimir eigenvalues of the six pieces as rational functions
/// of (alpha, beta, gamma, t). Throws DegenerateVogelPoint when a formula
/// denominator vanishes (e.g. gamma = 0 for so(4), beta = gamma for so(8)).
UniversalDecomposition universal_decomposition(const VogelPoint& point);

/// Projector label -> piece label. B_r/D_r: proj4 -> Y2a, proj5 -> Y2b;
/// C_r swaps those two. proj1 -> X2, proj2 -> ad, proj3 -> T0, proj6 -> Y2g.
std::map<std::string, std::string> correspondence(const AlgebraSpec& spec);

/// For each projector of a generic system: trace must equal the universal
/// dimension of its piece and the eigenvalue must equal the piece's c_hat.
VerificationRecord cross_check(const AlgebraSpec& spec, const ProjectorSystem& system);

}  // namespace casimir
