#include <doctest.h>

#include "casimir/errors.hpp"
#include "casimir/structure.hpp"

using namespace casimir;

namespace {

std::vector<AlgebraSpec> oracle_specs() {
  return {make_spec(Family::Orthogonal, 3), make_spec(Family::Orthogonal, 4),
          make_spec(Family::Symplectic, 2), make_spec(Family::Symplectic, 4)};
}

}  // namespace

TEST_CASE("structure constants are eps-antisymmetric in each index pair") {
  for (const AlgebraSpec& spec : oracle_specs()) {
    StructureConstants x = structure_constants(spec);
    Rational meps(-spec.epsilon);
    for (const auto& [k, v] : x.entries) {
      CHECK(x.entry(k[1], k[0], k[2], k[3], k[4], k[5]) == meps * v);
      CHECK(x.entry(k[0], k[1], k[3], k[2], k[4], k[5]) == meps * v);
      CHECK(x.entry(k[0], k[1], k[2], k[3], k[5], k[4]) == meps * v);
    }
  }
}

TEST_CASE("so(3): [M_01, M_12] = M_02") {
  AlgebraSpec so3 = make_spec(Family::Orthogonal, 3);
  SparseOperator lhs = commutator(generator_matrix(so3, 0, 1), generator_matrix(so3, 1, 2));
  CHECK(lhs == generator_matrix(so3, 0, 2));
}

TEST_CASE("commutators of defining matrices match the structure constants") {
  for (const AlgebraSpec& spec : oracle_specs()) {
    StructureConstants x = structure_constants(spec);
    auto labels = generator_labels(spec);
    int n = spec.n;
    for (const auto& [i, j] : labels)
      for (const auto& [k, l] : labels) {
        SparseOperator lhs = commutator(generator_matrix(spec, i, j), generator_matrix(spec, k, l));
        SparseOperator rhs = zero_op(n, 1);
        for (int m1 = 0; m1 < n; ++m1)
          for (int m2 = 0; m2 < n; ++m2) {
            Rational v = x.entry(i, j, k, l, m1, m2);
            if (v != 0) rhs = add(rhs, scale(v, generator_matrix(spec, m1, m2)));
          }
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("Jacobi identity") {
  for (const AlgebraSpec& spec : oracle_specs()) CHECK(jacobi_identity_holds(spec));
}

TEST_CASE("Killing metric closed form") {
  AlgebraSpec so3 = make_spec(Family::Orthogonal, 3);
  KillingMetric g = killing_metric(so3);
  CHECK(g.entry(0, 1, 1, 0) == 2);   // the 1-based (12,21) component
  CHECK(g.entry(0, 1, 0, 1) == -2);

  AlgebraSpec bogus{Family::Orthogonal, 2, 1, 2};  // so(2): N - 2 eps = 0
  CHECK_THROWS_AS(killing_metric(bogus), DegenerateKilling);
}

TEST_CASE("Killing metric: trace form equals closed form") {
  for (const AlgebraSpec& spec : oracle_specs()) {
    KillingMetric g = killing_metric(spec);
    auto labels = generator_labels(spec);
    auto gtr = killing_trace_form(spec);
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = 0; b < labels.size(); ++b)
        CHECK(gtr[a][b] ==
              g.entry(labels[a].first, labels[a].second, labels[b].first, labels[b].second));
  }
}

TEST_CASE("inverse Killing metric contracts to the pair-space identity") {
  for (const AlgebraSpec& spec : oracle_specs()) {
    KillingMetric g = killing_metric(spec);
    int n = spec.n;
    for (int i1 = 0; i1 < n; ++i1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int k1 = 0; k1 < n; ++k1)
          for (int k2 = 0; k2 < n; ++k2) {
            Rational s(0);
            for (int j1 = 0; j1 < n; ++j1)
              for (int j2 = 0; j2 < n; ++j2)
                s += g.inverse(i1, i2, j1, j2) * g.entry(j1, j2, k1, k2);
            Rational expect((i1 == k1 && i2 == k2) ? 1 : 0);
            Rational swapped((i1 == k2 && i2 == k1) ? 1 : 0);
            CHECK(s == (expect - Rational(spec.epsilon) * swapped) / 2);
          }
  }
}
