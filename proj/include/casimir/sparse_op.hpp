#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/rational.hpp"

namespace casimir {

using Index = std::int64_t;

/// Multi-index flattening with slot 1 most significant:
/// flat = sum_s i_s * n^(k-s), i_s in [0, n).
Index flatten(std::span<const int> idx, int n);
std::vector<int> unflatten(Index flat, int n, int k);

/// Exact sparse linear operator on V_n^(tensor k). Canonical form: rows
/// sorted, entries in each row sorted by column, no stored zeros. Immutable
/// after construction, so equality is plain structural comparison.
class SparseOperator {
 public:
  struct Entry {
    Index col;
    Rational value;
    bool operator==(const Entry&) const = default;
  };
  struct Row {
    Index row;
    std::vector<Entry> entries;
    bool operator==(const Row&) const = default;
  };

  SparseOperator() = default;
  SparseOperator(int n, int k, std::vector<Row> rows);

  int site_dim() const { return n_; }
  int rank() const { return k_; }
  Index dim_total() const;
  const std::vector<Row>& rows() const { return rows_; }
  const Row* find_row(Index r) const;

  std::size_t nnz() const;
  bool is_zero() const { return rows_.empty(); }
  Rational entry(Index r, Index c) const;
  void for_each(const std::function<void(Index, Index, const Rational&)>& fn) const;

  bool operator==(const SparseOperator&) const = default;

 private:
  int n_ = 1;
  int k_ = 1;
  std::vector<Row> rows_;
};

/// Accumulating builder: duplicate (row, col) contributions sum; exact zeros
/// are pruned on build.
class OperatorBuilder {
 public:
  OperatorBuilder(int n, int k) : n_(n), k_(k) {}
  void add(Index row, Index col, Rational v);
  SparseOperator build() &&;

 private:
  int n_, k_;
  std::vector<std::tuple<Index, Index, Rational>> triplets_;
};

// elementary operators
SparseOperator identity_op(int n, int k);
SparseOperator zero_op(int n, int k);

/// Permutation of tensor slots a and b (1-based).
SparseOperator permutation(int n, int k, int a, int b);

/// Metric contraction K_ab with components cbar^{i_a i_b} c_{j_a j_b} times
/// identity on the remaining slots.
SparseOperator contraction(const AlgebraSpec& spec, int k, int a, int b);

/// (Anti)symmetrizer P^eps_ab = (1 - eps P_ab)/2; a projector.
SparseOperator sym_projector(const AlgebraSpec& spec, int k, int a, int b);

/// Complete antisymmetrizer A_r on V_n^(tensor r), built as the signed sum
/// of the r! slot permutations with weight 1/r!. Zero when r > n.
SparseOperator antisymmetrizer(int n, int r);

/// E_r on V_{2r}^(tensor r): ((-1)^{r/2}/r!) times the rank-2r Levi-Civita
/// symbol with eps^{0 1 ... 2r-1} = +1. Throws OddRank for odd r.
SparseOperator epsilon_operator(int r);

/// Tensors a rank-2 operator into slots (a, b) of a rank-k space, identity
/// elsewhere.
SparseOperator embed_pair(const SparseOperator& core, int k, int a, int b);

// exact arithmetic; all results are in canonical pruned form
SparseOperator compose(const SparseOperator& f, const SparseOperator& g);  // f * g
SparseOperator add(const SparseOperator& f, const SparseOperator& g);
SparseOperator subtract(const SparseOperator& f, const SparseOperator& g);
SparseOperator scale(const Rational& s, const SparseOperator& f);
Rational trace(const SparseOperator& f);

inline SparseOperator operator*(const SparseOperator& f, const SparseOperator& g) { return compose(f, g); }
inline SparseOperator operator+(const SparseOperator& f, const SparseOperator& g) { return add(f, g); }
inline SparseOperator operator-(const SparseOperator& f, const SparseOperator& g) { return subtract(f, g); }
inline SparseOperator operator*(const Rational& s, const SparseOperator& f) { return scale(s, f); }

/// Commutator [f, g] = fg - gf.
inline SparseOperator commutator(const SparseOperator& f, const SparseOperator& g) {
  return subtract(compose(f, g), compose(g, f));
}

/// Bit-exact sparse file format:
///   SPARSEOP n=<N> k=<rank> nnz=<count>
///   <row> <col> <p>/<q>      (sorted by (row, col), gcd(p,q)=1, q>0)
void write_sparse(std::ostream& os, const SparseOperator& op);
SparseOperator read_sparse(std::istream& is);

}  // namespace casimir
