#pragma once

#include <utility>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/sparse_op.hpp"

namespace casimir {

/// Basis of the adjoint space inside V_N^2: w_{ab} = e_a x e_b - eps e_b x e_a
/// for a < b, plus w_{aa} = e_a x e_a in the symplectic case. Labels are in
/// lexicographic order; this is also the generator enumeration used for
/// exports.
struct AdjointBasis {
  AlgebraSpec spec;
  std::vector<std::pair<int, int>> labels;

  int dim() const { return static_cast<int>(labels.size()); }
  /// Position of a canonical label (a <= b as applicable); -1 if not a label.
  int index_of(int a, int b) const;
};

AdjointBasis adjoint_basis(const AlgebraSpec& spec);

/// Invariant rank-4 operators satisfy X = I X I with I the pair-symmetrizer
/// P^eps_12 P^eps_34; on that corner the compression to adjoint-pair
/// coordinates (site dim = adjoint_dim, rank 2) is an exact algebra
/// isomorphism that preserves traces. expand is its two-sided inverse.
SparseOperator compress_to_adjoint(const AlgebraSpec& spec, const SparseOperator& x4);
SparseOperator expand_from_adjoint(const AlgebraSpec& spec, const SparseOperator& y2);

}  // namespace casimir
