#include "casimir/casimir_ops.hpp"

#include "casimir/errors.hpp"
#include "casimir/pair_basis.hpp"

namespace casimir {

SparseOperator casimir_defining(const AlgebraSpec& spec) {
  Rational pref(1, 2 * (spec.n - 2 * spec.epsilon));
  SparseOperator p = permutation(spec.n, 2, 1, 2);
  SparseOperator k = contraction(spec, 2, 1, 2);
  return scale(pref, subtract(p, scale(Rational(spec.epsilon), k)));
}

SparseOperator casimir_defining_structural(const AlgebraSpec& spec) {
  KillingMetric g = killing_metric(spec);
  int n = spec.n;
  OperatorBuilder builder(n, 2);
  for (const auto& [key, gv] : g.inverse_entries) {
    SparseOperator m1 = generator_matrix(spec, key[0], key[1]);
    SparseOperator m2 = generator_matrix(spec, key[2], key[3]);
    m1.for_each([&](Index r1, Index c1, const Rational& v1) {
      m2.for_each([&](Index r2, Index c2, const Rational& v2) {
        builder.add(r1 * n + r2, c1 * n + c2, gv * v1 * v2);
      });
    });
  }
  return std::move(builder).build();
}

InvariantOps invariant_ops(const AlgebraSpec& spec) {
  int n = spec.n;
  SparseOperator pp = compose(sym_projector(spec, 4, 1, 2), sym_projector(spec, 4, 3, 4));
  SparseOperator p13p24 = compose(permutation(n, 4, 1, 3), permutation(n, 4, 2, 4));
  SparseOperator k13k24 = compose(contraction(spec, 4, 1, 3), contraction(spec, 4, 2, 4));
  return InvariantOps{pp, compose(pp, compose(p13p24, pp)), compose(pp, compose(k13k24, pp))};
}

SparseOperator casimir_adjoint(const AlgebraSpec& spec) {
  int n = spec.n;
  SparseOperator pp = compose(sym_projector(spec, 4, 1, 2), sym_projector(spec, 4, 3, 4));
  SparseOperator core = subtract(permutation(n, 4, 1, 3),
                                 scale(Rational(spec.epsilon), contraction(spec, 4, 1, 3)));
  Rational pref(2, n - 2 * spec.epsilon);
  return scale(pref, compose(pp, compose(core, pp)));
}

SparseOperator casimir_adjoint_structural(const AlgebraSpec& spec) {
  StructureConstants x = structure_constants(spec);
  KillingMetric g = killing_metric(spec);
  int n = spec.n;
  Index nn = static_cast<Index>(n) * n;
  // group X by its first index pair: (i1,i2) -> list of (col, row, value) on V_N^2
  std::vector<std::vector<std::tuple<Index, Index, Rational>>> xi(
      static_cast<std::size_t>(nn));
  for (const auto& [key, v] : x.entries) {
    Index first = static_cast<Index>(key[0]) * n + key[1];
    Index col = static_cast<Index>(key[2]) * n + key[3];
    Index row = static_cast<Index>(key[4]) * n + key[5];
    xi[static_cast<std::size_t>(first)].emplace_back(col, row, v);
  }
  OperatorBuilder builder(n, 4);
  for (const auto& [key, gv] : g.inverse_entries) {
    Index a = static_cast<Index>(key[0]) * n + key[1];
    Index b = static_cast<Index>(key[2]) * n + key[3];
    for (const auto& [col1, row1, v1] : xi[static_cast<std::size_t>(a)])
      for (const auto& [col2, row2, v2] : xi[static_cast<std::size_t>(b)])
        builder.add(row1 * nn + row2, col1 * nn + col2, gv * v1 * v2);
  }
  return std::move(builder).build();
}

std::pair<SparseOperator, SparseOperator> casimir_split(const AlgebraSpec& spec,
                                                        const SparseOperator& c_ad) {
  InvariantOps ops = invariant_ops(spec);
  Rational half(1, 2);
  SparseOperator plus = scale(half, compose(add(ops.I, ops.P), c_ad));
  SparseOperator minus = scale(half, compose(subtract(ops.I, ops.P), c_ad));
  return {plus, minus};
}

SparseOperator adjoint_action(const AlgebraSpec& spec, int i, int j) {
  bool valid = spec.family == Family::Orthogonal ? (i < j) : (i <= j);
  if (!valid || i < 0 || j >= spec.n)
    throw InvalidGeneratorLabel("generator label (" + std::to_string(i) + "," +
                                std::to_string(j) + ") not in the ordered basis");
  SparseOperator m = generator_matrix(spec, i, j);
  int n = spec.n;
  OperatorBuilder builder(n, 4);
  Index d3 = static_cast<Index>(n) * n * n;
  m.for_each([&](Index r, Index c, const Rational& v) {
    for (Index rest = 0; rest < d3; ++rest) {
      std::vector<int> sp = unflatten(rest, n, 3);
      for (int slot = 0; slot < 4; ++slot) {
        std::vector<int> ri(4), ci(4);
        int s = 0;
        for (int t = 0; t < 4; ++t)
          if (t != slot) {
            ri[t] = sp[s];
            ci[t] = sp[s];
            ++s;
          }
        ri[slot] = static_cast<int>(r);
        ci[slot] = static_cast<int>(c);
        builder.add(flatten(ri, n), flatten(ci, n), v);
      }
    }
  });
  return std::move(builder).build();
}

SparseOperator CasimirBundle::to_v4(const SparseOperator& pair_op) const {
  return expand_from_adjoint(spec, pair_op);
}

CasimirBundle make_bundle(const AlgebraSpec& spec) {
  CasimirBundle b;
  b.spec = spec;
  b.c_f = casimir_defining(spec);
  InvariantOps ops = invariant_ops(spec);
  b.op_I = compress_to_adjoint(spec, ops.I);
  b.op_P = compress_to_adjoint(spec, ops.P);
  b.op_K = compress_to_adjoint(spec, ops.K);
  b.c_ad = compress_to_adjoint(spec, casimir_adjoint(spec));
  // compressed I is the exact identity on the pair space; C_pm stay cheap
  Rational half(1, 2);
  b.c_plus = scale(half, compose(add(b.op_I, b.op_P), b.c_ad));
  b.c_minus = scale(half, compose(subtract(b.op_I, b.op_P), b.c_ad));
  return b;
}

}  // namespace casimir
