#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "casimir/rational.hpp"

namespace casimir {

enum class Family { Orthogonal, Symplectic };

/// so(N) for epsilon = +1, sp(N) for epsilon = -1. The signed dimension
/// m = epsilon * n drives every closed formula downstream.
struct AlgebraSpec {
  Family family;
  int n;        // dimension of the defining space V_N
  int epsilon;  // +1 orthogonal, -1 symplectic
  int m;        // epsilon * n

  // dim so(N) = N(N-1)/2, dim sp(N) = N(N+1)/2; both equal m(m-1)/2.
  int adjoint_dim() const { return m * (m - 1) / 2; }
  std::string name() const;

  bool operator==(const AlgebraSpec&) const = default;
};

inline constexpr int kDefaultMaxN = 12;

/// Validates and fills epsilon/m. Throws SymplecticOddDimension,
/// DimensionTooSmall or DimensionTooLarge.
AlgebraSpec make_spec(Family family, int n, int max_n = kDefaultMaxN);

/// Invariant metric c on V_N: identity for so(N), the block form
/// [[0, I_r], [-I_r, 0]] for sp(2r). Satisfies c_ij = epsilon c_ji and
/// cbar^{ik} c_{kj} = delta^i_j exactly.
struct MetricTensor {
  int dim = 0;
  int epsilon = 1;
  std::map<std::pair<int, int>, Rational> entries;          // c_ij, zeros absent
  std::map<std::pair<int, int>, Rational> inverse_entries;  // cbar^ij

  Rational entry(int i, int j) const;
  Rational inverse(int i, int j) const;

  // Each row of c (and cbar) has exactly one nonzero; these return its
  // column and value.
  std::pair<int, Rational> lower_partner(int i) const { return lower_[i]; }
  std::pair<int, Rational> raise_partner(int i) const { return raise_[i]; }

  std::vector<std::pair<int, Rational>> lower_, raise_;
};

MetricTensor metric(const AlgebraSpec& spec);

/// Vogel parameters (alpha, beta, gamma) with t = alpha + beta + gamma,
/// the dual Coxeter number.
struct VogelPoint {
  Rational alpha, beta, gamma, t;
};

/// B_r: (-2, 4, 2r-3); C_r: (-2, 1, r+2); D_r: (-2, 4, 2r-4).
VogelPoint vogel_point(const AlgebraSpec& spec);

/// A_r row (-2, 2, r+1): kept for reference only, no sl operators exist here.
VogelPoint sl_vogel_point(int r);

}  // namespace casimir
