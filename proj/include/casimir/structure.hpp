#pragma once

#include <array>
#include <map>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/sparse_op.hpp"

namespace casimir {

/// Structure constants X_{i1i2,j1j2}^{k1k2} in the two-index generator
/// labeling: [M_{i1i2}, M_{j1j2}] = X_{i1i2,j1j2}^{k1k2} M_{k1k2} with the
/// sum over (k1, k2) unrestricted. Antisymmetric (sign -eps) under the swap
/// of each index pair.
struct StructureConstants {
  AlgebraSpec spec;
  std::map<std::array<int, 6>, Rational> entries;  // zeros absent

  Rational entry(int i1, int i2, int j1, int j2, int k1, int k2) const;
};

StructureConstants structure_constants(const AlgebraSpec& spec);

/// Defining-representation generator M_ij = e_ij - eps e_ji with the second
/// index lowered: (M_ij)^k_l = c_jl d^k_i - eps c_il d^k_j. Rank-1 operator
/// on V_N.
SparseOperator generator_matrix(const AlgebraSpec& spec, int i, int j);

/// Generator labels in lexicographic order: i < j orthogonal, i <= j
/// symplectic.
std::vector<std::pair<int, int>> generator_labels(const AlgebraSpec& spec);

/// Cartan-Killing metric in the two-index labeling, closed form
/// g_{i1i2,j1j2} = 2(N - 2 eps)(c_{i2j1} c_{j2i1} - eps c_{i1j1} c_{j2i2}),
/// with its inverse g^{i1i2,j1j2} = (eps cbar^{i1j2} cbar^{i2j1}
/// - cbar^{i1j1} cbar^{i2j2}) / (8(N - 2 eps)).
struct KillingMetric {
  AlgebraSpec spec;
  std::map<std::array<int, 4>, Rational> entries;
  std::map<std::array<int, 4>, Rational> inverse_entries;

  Rational entry(int i1, int i2, int j1, int j2) const;
  Rational inverse(int i1, int i2, int j1, int j2) const;
};

KillingMetric killing_metric(const AlgebraSpec& spec);

/// Independent route to the Killing form: g_ab = tr(ad(X_a) ad(X_b)) over the
/// ordered generator basis, with the adjoint matrices assembled from the
/// structure constants. Used only to cross-check the closed form.
std::vector<std::vector<Rational>> killing_trace_form(const AlgebraSpec& spec);

/// Brute-force Jacobi identity check on the ordered generator basis.
bool jacobi_identity_holds(const AlgebraSpec& spec);

/// Structure constants folded onto the ordered basis: [M_a, M_b] = f^c_ab M_c.
/// f[a][b] lists (c, coefficient) pairs.
std::vector<std::vector<std::vector<std::pair<int, Rational>>>> basis_structure_constants(
    const AlgebraSpec& spec);

}  // namespace casimir
