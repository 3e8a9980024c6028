#pragma once

#include "casimir/algebra.hpp"
#include "casimir/sparse_op.hpp"
#include "casimir/structure.hpp"

namespace casimir {

/// Split Casimir in the defining representation, rank-2 core on V_N^2:
/// C_f = (P_12 - eps K_12) / (2(N - 2 eps)).
SparseOperator casimir_defining(const AlgebraSpec& spec);

/// Oracle route for C_f: contract the inverse Killing metric with generator
/// matrices, g^{i1i2,i3i4} M_{i1i2} x M_{i3i4}, unrestricted index sums.
/// O(N^6)-ish; intended for n <= 6 cross-checks only.
SparseOperator casimir_defining_structural(const AlgebraSpec& spec);

/// The three elementary invariants on V_ad x V_ad inside V_N^4:
/// I = P^eps_12 P^eps_34, P = I P_13 P_24 I, K = I K_13 K_24 I.
struct InvariantOps {
  SparseOperator I, P, K;  // rank-4 on V_N^4
};
InvariantOps invariant_ops(const AlgebraSpec& spec);

/// Split Casimir in ad x ad, rank-4 on V_N^4:
/// C_ad = 2/(N - 2 eps) * I (P_13 - eps K_13) I.
SparseOperator casimir_adjoint(const AlgebraSpec& spec);

/// Oracle route for C_ad: g^{i1i2,i3i4} X_{i1i2,j1j2}^{k1k2}
/// X_{i3i4,j3j4}^{k3k4} with unrestricted sums. n <= 6 cross-checks only.
SparseOperator casimir_adjoint_structural(const AlgebraSpec& spec);

/// Symmetric/antisymmetric parts C_pm = (I pm P) C_ad / 2; rank-4 in, rank-4
/// out.
std::pair<SparseOperator, SparseOperator> casimir_split(const AlgebraSpec& spec,
                                                        const SparseOperator& c_ad);

/// Four-fold comultiplication of the generator M_ij: sum over the four slots
/// of V_N^4. Commutes with every invariant operator; ad-invariance tests
/// build commutators against it.
SparseOperator adjoint_action(const AlgebraSpec& spec, int i, int j);

/// All the heavy algebra happens in adjoint-pair coordinates (site dim =
/// adjoint_dim, rank 2); to_v4 expands any of the six operators back to the
/// rank-4 form on V_N^4.
struct CasimirBundle {
  AlgebraSpec spec;
  SparseOperator c_f;  // rank-2 on V_N^2
  SparseOperator op_I, op_P, op_K;        // adjoint-pair coordinates
  SparseOperator c_ad, c_plus, c_minus;   // adjoint-pair coordinates

  SparseOperator to_v4(const SparseOperator& pair_op) const;
};

CasimirBundle make_bundle(const AlgebraSpec& spec);

}  // namespace casimir
