#include "casimir/structure.hpp"

#include "casimir/errors.hpp"
#include "casimir/pair_basis.hpp"

namespace casimir {

Rational StructureConstants::entry(int i1, int i2, int j1, int j2, int k1, int k2) const {
  auto it = entries.find({i1, i2, j1, j2, k1, k2});
  return it == entries.end() ? Rational(0) : it->second;
}

StructureConstants structure_constants(const AlgebraSpec& spec) {
  // X = 4 Sym^eps(c_{i2 j1} d_{i1}^{k1} d_{j2}^{k2}) where Sym^eps applies
  // (1 - eps * swap)/2 to the pairs (i1,i2), (j1,j2), (k1,k2); net weight
  // 4 / 2^3 = 1/2 per signed term.
  StructureConstants x;
  x.spec = spec;
  MetricTensor c = metric(spec);
  int n = spec.n;
  Rational half(1, 2);
  auto scatter = [&](std::array<int, 6> key, const Rational& v) {
    if (v == 0) return;
    auto it = x.entries.find(key);
    if (it == x.entries.end()) {
      x.entries.emplace(key, v);
    } else {
      it->second += v;
      if (it->second == 0) x.entries.erase(it);
    }
  };
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2) {
      auto [j1, cv] = c.lower_partner(i2);  // c_{i2 j1} != 0
      for (int j2 = 0; j2 < n; ++j2) {
        int k1 = i1, k2 = j2;
        Rational base = half * cv;
        // each swapped pair carries a factor -eps
        for (int si = 0; si < 2; ++si)
          for (int sj = 0; sj < 2; ++sj)
            for (int sk = 0; sk < 2; ++sk) {
              int swaps = si + sj + sk;
              bool negate = spec.epsilon == 1 && swaps % 2 == 1;
              std::array<int, 6> key{si ? i2 : i1, si ? i1 : i2, sj ? j2 : j1,
                                     sj ? j1 : j2, sk ? k2 : k1, sk ? k1 : k2};
              scatter(key, negate ? -base : base);
            }
      }
    }
  return x;
}

SparseOperator generator_matrix(const AlgebraSpec& spec, int i, int j) {
  if (i < 0 || j < 0 || i >= spec.n || j >= spec.n)
    throw InvalidGeneratorLabel("generator index out of range");
  MetricTensor c = metric(spec);
  OperatorBuilder builder(spec.n, 1);
  auto [lj, vj] = c.lower_partner(j);  // c_{j l} != 0 at l = lj
  builder.add(i, lj, vj);
  auto [li, vi] = c.lower_partner(i);
  builder.add(j, li, Rational(-spec.epsilon) * vi);
  return std::move(builder).build();
}

std::vector<std::pair<int, int>> generator_labels(const AlgebraSpec& spec) {
  return adjoint_basis(spec).labels;
}

Rational KillingMetric::entry(int i1, int i2, int j1, int j2) const {
  auto it = entries.find({i1, i2, j1, j2});
  return it == entries.end() ? Rational(0) : it->second;
}

Rational KillingMetric::inverse(int i1, int i2, int j1, int j2) const {
  auto it = inverse_entries.find({i1, i2, j1, j2});
  return it == inverse_entries.end() ? Rational(0) : it->second;
}

KillingMetric killing_metric(const AlgebraSpec& spec) {
  if (spec.n == 2 * spec.epsilon)
    throw DegenerateKilling("N - 2 eps = 0: Killing form degenerates");
  KillingMetric g;
  g.spec = spec;
  MetricTensor c = metric(spec);
  int n = spec.n;
  Rational pref(2 * (n - 2 * spec.epsilon));
  Rational ipref = Rational(1) / (8 * (n - 2 * spec.epsilon));
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = 0; j2 < n; ++j2) {
          Rational v = pref * (c.entry(i2, j1) * c.entry(j2, i1) -
                               Rational(spec.epsilon) * c.entry(i1, j1) * c.entry(j2, i2));
          if (v != 0) g.entries[{i1, i2, j1, j2}] = v;
          Rational w = ipref * (Rational(spec.epsilon) * c.inverse(i1, j2) * c.inverse(i2, j1) -
                                c.inverse(i1, j1) * c.inverse(i2, j2));
          if (w != 0) g.inverse_entries[{i1, i2, j1, j2}] = w;
        }
  return g;
}

std::vector<std::vector<std::vector<std::pair<int, Rational>>>> basis_structure_constants(
    const AlgebraSpec& spec) {
  StructureConstants x = structure_constants(spec);
  AdjointBasis basis = adjoint_basis(spec);
  int d = basis.dim();
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> f(
      d, std::vector<std::vector<std::pair<int, Rational>>>(d));
  // fold the unrestricted (k1,k2) sum onto canonical labels: the mirrored
  // term X^{k2k1} M_{k2k1} doubles off-diagonal labels
  for (int a = 0; a < d; ++a) {
    auto [i1, i2] = basis.labels[a];
    for (int b = 0; b < d; ++b) {
      auto [j1, j2] = basis.labels[b];
      for (int ci = 0; ci < d; ++ci) {
        auto [k1, k2] = basis.labels[ci];
        Rational v = x.entry(i1, i2, j1, j2, k1, k2);
        if (k1 != k2) v *= 2;
        if (v != 0) f[a][b].emplace_back(ci, std::move(v));
      }
    }
  }
  return f;
}

std::vector<std::vector<Rational>> killing_trace_form(const AlgebraSpec& spec) {
  auto f = basis_structure_constants(spec);
  int d = static_cast<int>(f.size());
  // ad(X_a)^c_b = f^c_{a b}; dense is fine at these sizes
  std::vector<std::vector<std::vector<Rational>>> ad(
      d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (const auto& [ci, v] : f[a][b]) ad[a][ci][b] = v;
  std::vector<std::vector<Rational>> g(d, std::vector<Rational>(d, Rational(0)));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Rational t(0);
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) t += ad[a][p][q] * ad[b][q][p];
      g[a][b] = std::move(t);
    }
  return g;
}

bool jacobi_identity_holds(const AlgebraSpec& spec) {
  auto f = basis_structure_constants(spec);
  int d = static_cast<int>(f.size());
  auto dd = static_cast<std::size_t>(d);
  std::vector<Rational> F(dd * dd * dd, Rational(0));
  auto at = [&](int a, int b, int c) -> Rational& {
    return F[(static_cast<std::size_t>(a) * dd + static_cast<std::size_t>(b)) * dd +
             static_cast<std::size_t>(c)];
  };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (const auto& [ci, v] : f[a][b]) at(a, b, ci) = v;
  // the Jacobi expression is antisymmetric in (a, b, c): a < b < c suffices
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int c = b + 1; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          Rational s(0);
          for (int m = 0; m < d; ++m) {
            s += at(a, b, m) * at(m, c, e);
            s += at(b, c, m) * at(m, a, e);
            s += at(c, a, m) * at(m, b, e);
          }
          if (s != 0) return false;
        }
  return true;
}

}  // namespace casimir
