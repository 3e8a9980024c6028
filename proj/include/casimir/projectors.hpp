#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "casimir/casimir_ops.hpp"
#include "casimir/report.hpp"
#include "casimir/sparse_op.hpp"

namespace casimir {

/// Roots a_1..a_6 of the degree-6 characteristic identity:
/// 0, -1/2, -1, 1/(M-2), -2/(M-2), (4-M)/(2(M-2)).
std::array<Rational, 6> generic_roots(int m);

/// Eigenspace dimensions as polynomials in M:
/// M(M-1)(M+2)(M-3)/8, M(M-1)/2, 1, M(M+1)(M+2)(M-3)/12,
/// M(M-1)(M-2)(M-3)/24, (M-1)(M+2)/2.
std::array<Rational, 6> generic_dims(int m);

/// Monic polynomial annihilating C_ad. coefficients in ascending degree,
/// leading 1 included; roots carry multiplicities (degenerate at M = 4, 6, 8).
struct CharIdentity {
  std::vector<Rational> coefficients;
  std::vector<std::pair<Rational, int>> roots;
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

/// Builds the degree-6 identity, certifies by exact evaluation that it
/// annihilates C_ad, and checks the coefficients against the factorized
/// product over the roots. For so(8) additionally certifies the minimal
/// degree-5 identity with roots {0, -1/2, -1, -1/3, 1/6}. Throws
/// IdentityViolation on any nonzero residual.
CharIdentity characteristic_identity(const CasimirBundle& bundle);

/// Exact checks of the intermediate operator identities that lead from the
/// split parts to the characteristic identity (quadratic through sextic
/// relations for C_plus, the closed forms for C_pm, K recovery, and the
/// reduced identities at M = 4, 6). Failures are reported, not thrown.
VerificationRecord intermediate_identities(const CasimirBundle& bundle);

struct ProjectorItem {
  std::string label;
  SparseOperator op;  // adjoint-pair coordinates
  std::optional<Rational> eigenvalue;
  long long expected_dim = 0;
  bool primitive = true;
};

struct ProjectorSystem {
  AlgebraSpec spec;
  std::vector<ProjectorItem> items;
};

/// The six projectors built from I, P, K, C_plus, C_plus^2, C_minus. For
/// M not in {3, -2, 4, 6, 8} the result is cross-checked against the
/// spectral formula prod_{i != j} (C_ad - a_i I)/(a_j - a_i); a mismatch is
/// an implementation bug and throws IdentityViolation. M = 8 callers must
/// use so8_system (NeedsSo8Refinement).
ProjectorSystem projectors_generic(const CasimirBundle& bundle);

/// Pole-free closed form of the fifth projector: the complete
/// (anti)symmetrizer of V_N^4 restricted to the pair space. Rank-4 on V_N^4.
SparseOperator projector5_closed(const AlgebraSpec& spec);

/// Pole-free closed form of the sixth projector,
/// 4/(M-2) I K_13 [ (1 + eps P_24)/2 - K_24/M ] I. Rank-4 on V_N^4.
SparseOperator projector6_closed(const AlgebraSpec& spec);

/// The seven so(8) projectors: the three generic ones, the 35-dimensional
/// complement inside the symmetric part, the self-dual/anti-self-dual split
/// of the rank-4 antisymmetrizer by E_4, and the 300-dimensional piece.
/// Items in order p1 (350), p2 (28), p3 (1), p6 (35), sd (35), asd (35),
/// p5 (300). Throws WrongAlgebra unless spec is so(8).
ProjectorSystem so8_system(const CasimirBundle& bundle);

/// Exact traces of the items; every trace must be a nonnegative integer and
/// they must sum to M^2(M-1)^2/4 (throws NonIntegerTrace / IdentityViolation).
std::vector<long long> dimensions(const ProjectorSystem& system);

}  // namespace casimir
