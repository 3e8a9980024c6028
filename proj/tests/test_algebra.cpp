#include <doctest.h>

#include "casimir/algebra.hpp"
#include "casimir/errors.hpp"

using namespace casimir;

TEST_CASE("make_spec fills epsilon and m") {
  AlgebraSpec so7 = make_spec(Family::Orthogonal, 7);
  CHECK(so7.epsilon == 1);
  CHECK(so7.m == 7);
  CHECK(so7.adjoint_dim() == 21);
  CHECK(so7.name() == "so(7)");

  AlgebraSpec sp6 = make_spec(Family::Symplectic, 6);
  CHECK(sp6.epsilon == -1);
  CHECK(sp6.m == -6);
  CHECK(sp6.adjoint_dim() == 21);
  CHECK(sp6.name() == "sp(6)");
}

TEST_CASE("make_spec rejects everything outside its domain") {
  CHECK_THROWS_AS(make_spec(Family::Symplectic, 5), SymplecticOddDimension);
  CHECK_THROWS_AS(make_spec(Family::Orthogonal, 2), DimensionTooSmall);
  CHECK_THROWS_AS(make_spec(Family::Symplectic, 0), DimensionTooSmall);
  CHECK_THROWS_AS(make_spec(Family::Orthogonal, 13), DimensionTooLarge);
  CHECK_THROWS_AS(make_spec(Family::Orthogonal, 9, 8), DimensionTooLarge);
  CHECK_NOTHROW(make_spec(Family::Orthogonal, 14, 14));  // cap is a knob
}

TEST_CASE("metric: so is the identity, sp the standard block form") {
  MetricTensor so3 = metric(make_spec(Family::Orthogonal, 3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(so3.entry(i, j) == Rational(i == j ? 1 : 0));

  MetricTensor sp2 = metric(make_spec(Family::Symplectic, 2));
  CHECK(sp2.entry(0, 1) == 1);
  CHECK(sp2.entry(1, 0) == -1);
  CHECK(sp2.entry(0, 0) == 0);
  CHECK(sp2.inverse(0, 1) == -1);
  CHECK(sp2.inverse(1, 0) == 1);
}

TEST_CASE("metric symmetry and inverse hold for every supported spec") {
  for (int n = 3; n <= 12; ++n) {
    for (Family f : {Family::Orthogonal, Family::Symplectic}) {
      if (f == Family::Symplectic && n % 2) continue;
      AlgebraSpec spec = make_spec(f, n);
      MetricTensor c = metric(spec);
      for (const auto& [key, v] : c.entries)
        CHECK(v == Rational(spec.epsilon) * c.entry(key.second, key.first));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Rational s(0);
          for (int k = 0; k < n; ++k) s += c.inverse(i, k) * c.entry(k, j);
          CHECK(s == Rational(i == j ? 1 : 0));
        }
    }
  }
}

TEST_CASE("vogel points match the parameter table") {
  VogelPoint so7 = vogel_point(make_spec(Family::Orthogonal, 7));
  CHECK(so7.alpha == -2);
  CHECK(so7.beta == 4);
  CHECK(so7.gamma == 3);
  CHECK(so7.t == 5);

  VogelPoint sp6 = vogel_point(make_spec(Family::Symplectic, 6));
  CHECK(sp6.alpha == -2);
  CHECK(sp6.beta == 1);
  CHECK(sp6.gamma == 5);
  CHECK(sp6.t == 4);

  VogelPoint so8 = vogel_point(make_spec(Family::Orthogonal, 8));
  CHECK(so8.alpha == -2);
  CHECK(so8.beta == 4);
  CHECK(so8.gamma == 4);
  CHECK(so8.t == 6);

  // t = alpha + beta + gamma always
  for (int n = 3; n <= 12; ++n)
    for (Family f : {Family::Orthogonal, Family::Symplectic}) {
      if (f == Family::Symplectic && n % 2) continue;
      VogelPoint p = vogel_point(make_spec(f, n));
      CHECK(p.t == p.alpha + p.beta + p.gamma);
    }

  VogelPoint sl4 = sl_vogel_point(3);
  CHECK(sl4.t == 4);
  CHECK(sl4.t == sl4.alpha + sl4.beta + sl4.gamma);
}

TEST_CASE("rational formatting") {
  CHECK(rat_str(Rational(-3, 7)) == "-3/7");
  CHECK(rat_str(Rational(5)) == "5");
  CHECK(rat_frac_str(Rational(5)) == "5/1");
  CHECK(rat_frac_str(Rational(-6, 8)) == "-3/4");
  CHECK(parse_rat("-3/4") == Rational(-3, 4));
  CHECK(parse_rat("12") == Rational(12));
  CHECK_THROWS_AS(parse_rat("x/y"), std::invalid_argument);
}
