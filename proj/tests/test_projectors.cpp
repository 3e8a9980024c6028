#include <doctest.h>

#include "casimir/errors.hpp"
#include "casimir/pair_basis.hpp"
#include "casimir/projectors.hpp"

using namespace casimir;

TEST_CASE("characteristic roots") {
  auto so7 = generic_roots(7);
  CHECK(so7[0] == 0);
  CHECK(so7[1] == Rational(-1, 2));
  CHECK(so7[2] == -1);
  CHECK(so7[3] == Rational(1, 5));
  CHECK(so7[4] == Rational(-2, 5));
  CHECK(so7[5] == Rational(-3, 10));

  auto sp6 = generic_roots(-6);
  CHECK(sp6[3] == Rational(-1, 8));
  CHECK(sp6[4] == Rational(1, 4));
  CHECK(sp6[5] == Rational(-5, 8));

  auto so8 = generic_roots(8);
  CHECK(so8[4] == Rational(-1, 3));
  CHECK(so8[5] == Rational(-1, 3));  // a5 = a6 at M = 8

  auto so4 = generic_roots(4);
  CHECK(so4[5] == 0);   // a6 = a1
  CHECK(so4[4] == -1);  // a5 = a3
  auto so6 = generic_roots(6);
  CHECK(so6[4] == Rational(-1, 2));  // a5 = a2
}

TEST_CASE("dimension polynomials reproduce the reference rows") {
  struct Row {
    Family f;
    int n;
    std::array<long long, 6> dims;
  };
  // so(11) dim1 = 1430: pinned by the sum rule and by dim X2 = 55*52/2
  const Row rows[] = {
      {Family::Orthogonal, 5, {35, 10, 1, 35, 5, 14}},
      {Family::Orthogonal, 7, {189, 21, 1, 168, 35, 27}},
      {Family::Orthogonal, 9, {594, 36, 1, 495, 126, 44}},
      {Family::Orthogonal, 10, {945, 45, 1, 770, 210, 54}},
      {Family::Orthogonal, 11, {1430, 55, 1, 1144, 330, 65}},
      {Family::Symplectic, 4, {35, 10, 1, 14, 35, 5}},
      {Family::Symplectic, 6, {189, 21, 1, 90, 126, 14}},
      {Family::Symplectic, 8, {594, 36, 1, 308, 330, 27}},
      {Family::Symplectic, 10, {1430, 55, 1, 780, 715, 44}},
      {Family::Symplectic, 12, {2925, 78, 1, 1650, 1365, 65}},
  };
  for (const Row& row : rows) {
    int m = row.f == Family::Orthogonal ? row.n : -row.n;
    auto dims = generic_dims(m);
    Rational sum(0);
    for (int i = 0; i < 6; ++i) {
      CHECK(dims[static_cast<std::size_t>(i)] == row.dims[static_cast<std::size_t>(i)]);
      sum += dims[static_cast<std::size_t>(i)];
    }
    CHECK(sum == Rational(Integer(m) * m * (m - 1) * (m - 1), 4));
  }
}

TEST_CASE("characteristic identity annihilates C_ad") {
  for (int n = 3; n <= 8; ++n)
    for (Family f : {Family::Orthogonal, Family::Symplectic}) {
      if (f == Family::Symplectic && n % 2) continue;
      AlgebraSpec spec = make_spec(f, n);
      CasimirBundle b = make_bundle(spec);
      CharIdentity id = characteristic_identity(b);
      CHECK(id.degree() == 6);
      CHECK(id.coefficients[0] == 0);
      CHECK(id.coefficients[5] == 2);
      CHECK(id.coefficients[6] == 1);
    }
}

TEST_CASE("root multiplicities at the degenerate values") {
  auto mult_of = [](const CharIdentity& id, const Rational& r) {
    for (const auto& [root, m] : id.roots)
      if (root == r) return m;
    return 0;
  };
  CharIdentity so4 = characteristic_identity(make_bundle(make_spec(Family::Orthogonal, 4)));
  CHECK(mult_of(so4, Rational(0)) == 2);
  CHECK(mult_of(so4, Rational(-1)) == 2);
  CharIdentity so6 = characteristic_identity(make_bundle(make_spec(Family::Orthogonal, 6)));
  CHECK(mult_of(so6, Rational(-1, 2)) == 2);
  CharIdentity so8 = characteristic_identity(make_bundle(make_spec(Family::Orthogonal, 8)));
  CHECK(mult_of(so8, Rational(-1, 3)) == 2);
  CHECK(mult_of(so8, Rational(1, 6)) == 1);
}

TEST_CASE("intermediate identities all hold") {
  for (const AlgebraSpec& spec :
       {make_spec(Family::Orthogonal, 3), make_spec(Family::Orthogonal, 4),
        make_spec(Family::Orthogonal, 5), make_spec(Family::Orthogonal, 6),
        make_spec(Family::Orthogonal, 8), make_spec(Family::Symplectic, 2),
        make_spec(Family::Symplectic, 4), make_spec(Family::Symplectic, 6)}) {
    VerificationRecord rec = intermediate_identities(make_bundle(spec));
    CHECK(rec.failures() == 0);
  }
}

TEST_CASE("generic projector systems") {
  CasimirBundle so7 = make_bundle(make_spec(Family::Orthogonal, 7));
  ProjectorSystem sys = projectors_generic(so7);
  CHECK(dimensions(sys) == std::vector<long long>{189, 21, 1, 168, 35, 27});
  for (const ProjectorItem& item : sys.items) CHECK(item.primitive);

  CasimirBundle sp6 = make_bundle(make_spec(Family::Symplectic, 6));
  CHECK(dimensions(projectors_generic(sp6)) == std::vector<long long>{189, 21, 1, 90, 126, 14});

  CHECK_THROWS_AS(projectors_generic(make_bundle(make_spec(Family::Orthogonal, 8))),
                  NeedsSo8Refinement);
}

TEST_CASE("projector algebra at a generic point") {
  CasimirBundle b = make_bundle(make_spec(Family::Orthogonal, 5));
  ProjectorSystem sys = projectors_generic(b);
  SparseOperator sum = zero_op(b.op_I.site_dim(), 2);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      SparseOperator prod = compose(sys.items[i].op, sys.items[j].op);
      if (i == j)
        CHECK(prod == sys.items[i].op);
      else
        CHECK(prod.is_zero());
    }
    sum = add(sum, sys.items[i].op);
    CHECK(compose(b.c_ad, sys.items[i].op) == scale(*sys.items[i].eigenvalue, sys.items[i].op));
  }
  CHECK(sum == b.op_I);
}

TEST_CASE("low-rank algebras: vanishing projectors, 3x3 = 1+3+5") {
  CasimirBundle so3 = make_bundle(make_spec(Family::Orthogonal, 3));
  ProjectorSystem s3 = projectors_generic(so3);
  CHECK(dimensions(s3) == std::vector<long long>{0, 3, 1, 0, 0, 5});
  CHECK(s3.items[0].op.is_zero());
  CHECK(s3.items[3].op.is_zero());
  CHECK(s3.items[4].op.is_zero());
  CHECK_FALSE(s3.items[0].primitive);

  CasimirBundle sp2 = make_bundle(make_spec(Family::Symplectic, 2));
  ProjectorSystem s2 = projectors_generic(sp2);
  CHECK(dimensions(s2) == std::vector<long long>{0, 3, 1, 0, 5, 0});
  CHECK(s2.items[0].op.is_zero());
  CHECK(s2.items[3].op.is_zero());
  CHECK(s2.items[5].op.is_zero());

  // the zero items are retained so that sum proj = I stays structurally uniform
  CHECK(s2.items.size() == 6);
}

TEST_CASE("non-primitive flags at M = 4 and M = 6") {
  ProjectorSystem so4 = projectors_generic(make_bundle(make_spec(Family::Orthogonal, 4)));
  CHECK(dimensions(so4) == std::vector<long long>{9, 6, 1, 10, 1, 9});
  CHECK_FALSE(so4.items[1].primitive);  // 3 + 3
  CHECK_FALSE(so4.items[3].primitive);  // 5 + 5
  CHECK(so4.items[0].primitive);
  CHECK(so4.items[5].primitive);

  ProjectorSystem so6 = projectors_generic(make_bundle(make_spec(Family::Orthogonal, 6)));
  CHECK(dimensions(so6) == std::vector<long long>{90, 15, 1, 84, 15, 20});
  CHECK_FALSE(so6.items[0].primitive);  // 45 + 45'
  for (int i = 1; i < 6; ++i) CHECK(so6.items[static_cast<std::size_t>(i)].primitive);
}

TEST_CASE("pole-free closed forms match the explicit projectors") {
  for (const AlgebraSpec& spec :
       {make_spec(Family::Orthogonal, 5), make_spec(Family::Orthogonal, 7),
        make_spec(Family::Symplectic, 4), make_spec(Family::Symplectic, 2)}) {
    CasimirBundle b = make_bundle(spec);
    ProjectorSystem sys = projectors_generic(b);
    CHECK(compress_to_adjoint(spec, projector5_closed(spec)) == sys.items[4].op);
    CHECK(compress_to_adjoint(spec, projector6_closed(spec)) == sys.items[5].op);
  }
  // the fifth projector is the complete (anti)symmetrizer restricted to the corner
  AlgebraSpec so5 = make_spec(Family::Orthogonal, 5);
  SparseOperator a4 = antisymmetrizer(5, 4);
  SparseOperator iv4 = compose(sym_projector(so5, 4, 1, 2), sym_projector(so5, 4, 3, 4));
  CHECK(projector5_closed(so5) == compose(iv4, compose(a4, iv4)));
}

TEST_CASE("so(8) refinement") {
  AlgebraSpec spec = make_spec(Family::Orthogonal, 8);
  CasimirBundle b = make_bundle(spec);
  ProjectorSystem sys = so8_system(b);
  CHECK(dimensions(sys) == std::vector<long long>{350, 28, 1, 35, 35, 35, 300});

  std::vector<std::string> labels;
  for (const ProjectorItem& item : sys.items) labels.push_back(item.label);
  CHECK(labels == std::vector<std::string>{"p1", "p2", "p3", "p6", "sd", "asd", "p5"});

  SparseOperator sum = zero_op(b.op_I.site_dim(), 2);
  for (std::size_t i = 0; i < sys.items.size(); ++i) {
    for (std::size_t j = 0; j < sys.items.size(); ++j) {
      SparseOperator prod = compose(sys.items[i].op, sys.items[j].op);
      if (i == j)
        CHECK(prod == sys.items[i].op);
      else
        CHECK(prod.is_zero());
    }
    sum = add(sum, sys.items[i].op);
    CHECK(compose(b.c_ad, sys.items[i].op) == scale(*sys.items[i].eigenvalue, sys.items[i].op));
  }
  CHECK(sum == b.op_I);

  // selfdual + antiselfdual = A4 on the corner; 105 = 70 + 35 refinement
  SparseOperator a4c = compress_to_adjoint(spec, antisymmetrizer(8, 4));
  CHECK(add(sys.items[4].op, sys.items[5].op) == a4c);
  CHECK(compress_to_adjoint(spec, projector5_closed(spec)) == a4c);
  CHECK(compress_to_adjoint(spec, projector6_closed(spec)) == sys.items[3].op);

  CHECK_THROWS_AS(so8_system(make_bundle(make_spec(Family::Orthogonal, 7))), WrongAlgebra);
}

TEST_CASE("dimensions() bug sentinels") {
  CasimirBundle b = make_bundle(make_spec(Family::Orthogonal, 3));
  ProjectorSystem broken;
  broken.spec = b.spec;
  broken.items.push_back(ProjectorItem{"half", scale(Rational(1, 2), b.op_I), Rational(0), 0, true});
  CHECK_THROWS_AS(dimensions(broken), NonIntegerTrace);
}
