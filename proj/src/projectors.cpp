#include "casimir/projectors.hpp"

#include <algorithm>

#include "casimir/errors.hpp"
#include "casimir/pair_basis.hpp"

namespace casimir {

namespace {

// polynomials as ascending coefficient vectors
std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Rational> poly_from_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> p{Rational(1)};
  for (const Rational& r : roots) p = poly_mul(p, {-r, Rational(1)});
  return p;
}

// [I, C, C^2, ..., C^max]
std::vector<SparseOperator> operator_powers(const SparseOperator& c, const SparseOperator& id,
                                            int max_pow) {
  std::vector<SparseOperator> p;
  p.reserve(static_cast<std::size_t>(max_pow) + 1);
  p.push_back(id);
  for (int i = 1; i <= max_pow; ++i) p.push_back(compose(p.back(), c));
  return p;
}

SparseOperator poly_eval(const std::vector<Rational>& coeffs,
                         const std::vector<SparseOperator>& powers) {
  SparseOperator out = zero_op(powers[0].site_dim(), powers[0].rank());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out = add(out, scale(coeffs[i], powers[i]));
  return out;
}

std::vector<Rational> degree6_coefficients(int m) {
  Rational d2(m - 2);
  Rational d2sq = d2 * d2, d2cb = d2sq * d2;
  return {
      Rational(0),
      Rational(-(m - 4)) / (2 * d2cb),
      Rational(Integer(m) * m - 16 * m + 40) / (4 * d2cb),
      Rational(Integer(m) * m * m - 3 * m * m - 22 * m + 56) / (4 * d2cb),
      Rational(5 * Integer(m) * m - 18 * m + 4) / (4 * d2sq),
      Rational(2),
      Rational(1),
  };
}

}  // namespace

std::array<Rational, 6> generic_roots(int m) {
  Rational d2(m - 2);
  return {Rational(0),         Rational(-1, 2),      Rational(-1),
          Rational(1) / d2,    Rational(-2) / d2,    Rational(4 - m) / (2 * d2)};
}

std::array<Rational, 6> generic_dims(int m) {
  Rational M(m);
  return {M * (M - 1) * (M + 2) * (M - 3) / 8,
          M * (M - 1) / 2,
          Rational(1),
          M * (M + 1) * (M + 2) * (M - 3) / 12,
          M * (M - 1) * (M - 2) * (M - 3) / 24,
          (M - 1) * (M + 2) / 2};
}

CharIdentity characteristic_identity(const CasimirBundle& bundle) {
  int m = bundle.spec.m;
  CharIdentity id;
  id.coefficients = degree6_coefficients(m);

  // the coefficient list must agree with the factorized product over the roots
  auto roots = generic_roots(m);
  std::vector<Rational> root_vec(roots.begin(), roots.end());
  if (poly_from_roots(root_vec) != id.coefficients)
    throw IdentityViolation(bundle.spec.name() + ": coefficient table disagrees with root product");

  for (const Rational& r : roots) {
    auto it = std::find_if(id.roots.begin(), id.roots.end(),
                           [&](const auto& p) { return p.first == r; });
    if (it == id.roots.end())
      id.roots.emplace_back(r, 1);
    else
      ++it->second;
  }

  auto powers = operator_powers(bundle.c_ad, bundle.op_I, 6);
  if (!poly_eval(id.coefficients, powers).is_zero())
    throw IdentityViolation(bundle.spec.name() + ": degree-6 identity does not annihilate C_ad");

  if (m == 8) {
    std::vector<Rational> so8_roots{Rational(0), Rational(-1, 2), Rational(-1),
                                    Rational(-1, 3), Rational(1, 6)};
    if (!poly_eval(poly_from_roots(so8_roots), powers).is_zero())
      throw IdentityViolation("so(8): degree-5 identity does not annihilate C_ad");
  }
  return id;
}

VerificationRecord intermediate_identities(const CasimirBundle& bundle) {
  const AlgebraSpec& spec = bundle.spec;
  int m = spec.m;
  int eps = spec.epsilon;
  VerificationRecord rec;
  rec.subject = spec.name();

  const SparseOperator& I = bundle.op_I;
  const SparseOperator& P = bundle.op_P;
  const SparseOperator& K = bundle.op_K;
  const SparseOperator& cp = bundle.c_plus;
  const SparseOperator& cm = bundle.c_minus;
  Rational half(1, 2);

  // closed forms of the split parts, rebuilt from primitives and compressed
  {
    int n = spec.n;
    SparseOperator pp = compose(sym_projector(spec, 4, 1, 2), sym_projector(spec, 4, 3, 4));
    SparseOperator p24 = permutation(n, 4, 2, 4);
    SparseOperator k13 = contraction(spec, 4, 1, 3);
    Rational pref(1, n - 2 * eps);
    SparseOperator minus_rhs = compress_to_adjoint(
        spec, scale(pref, compose(pp, compose(compose(subtract(p24, scale(Rational(eps), identity_op(n, 4))), k13), pp))));
    SparseOperator plus_core = subtract(scale(Rational(2), p24),
                                        add(compose(p24, k13), scale(Rational(eps), k13)));
    SparseOperator plus_rhs =
        compress_to_adjoint(spec, scale(pref, compose(pp, compose(plus_core, pp))));
    rec.add(cm == minus_rhs, "cminus-closed-form", "C- = (P24-eps)K13/(N-2eps) on pair space");
    rec.add(cp == plus_rhs, "cplus-closed-form",
            "C+ = (2P24-P24K13-epsK13)/(N-2eps) on pair space");
  }

  auto cpw = operator_powers(cp, I, 6);
  auto cmw = operator_powers(cm, I, 4);

  rec.add(cmw[2] == scale(-half, cm), "cminus-quadratic", "C-^2 = -C-/2");
  {
    bool ok = true;
    Rational f(1);
    for (int k = 2; k <= 4; ++k) {
      f *= -half;
      if (cmw[static_cast<std::size_t>(k)] != scale(f, cm)) ok = false;
    }
    rec.add(ok, "cminus-powers", "C-^k = (-1/2)^(k-1) C-, k=2..4");
  }

  // S = I K13 (1 + eps P24) I, the residual invariant in the C+^2 relation
  SparseOperator S;
  {
    int n = spec.n;
    SparseOperator pp = compose(sym_projector(spec, 4, 1, 2), sym_projector(spec, 4, 3, 4));
    SparseOperator core =
        compose(contraction(spec, 4, 1, 3),
                add(identity_op(n, 4), scale(Rational(eps), permutation(n, 4, 2, 4))));
    S = compress_to_adjoint(spec, compose(pp, compose(core, pp)));
  }
  Rational d2(m - 2);
  Rational d2sq = d2 * d2, d2cb = d2sq * d2;
  SparseOperator ipk = add(add(I, P), K);
  {
    SparseOperator rhs = add(subtract(scale(Rational(1) / d2sq, ipk), scale(Rational(1) / d2, cp)),
                             scale(Rational(m - 8) / (2 * d2sq), S));
    rec.add(cpw[2] == rhs, "cplus-square",
            "C+^2 = (I+P+K)/(M-2)^2 - C+/(M-2) + (M-8)/(2(M-2)^2) S");
  }
  if (m == 8) {
    SparseOperator rhs = add(scale(Rational(-1, 6), cp), scale(Rational(1, 36), ipk));
    rec.add(cpw[2] == rhs, "cplus-square-m8", "C+^2 = -C+/6 + (I+P+K)/36");
  } else {
    rec.add_skip("cplus-square-m8", "C+^2 = -C+/6 + (I+P+K)/36", "only-M=8");
  }

  SparseOperator ippm2k = subtract(add(I, P), scale(Rational(2), K));
  if (m != 8) {
    SparseOperator rhs =
        add(subtract(scale(-half, cpw[2]), scale(Rational(m - 8) / (2 * d2sq), cp)),
            scale(Rational(m - 4) / (2 * d2cb), ippm2k));
    rec.add(cpw[3] == rhs, "cplus-cubic",
            "C+^3 = -C+^2/2 - (M-8)/(2(M-2)^2) C+ + (M-4)/(2(M-2)^3)(I+P-2K)");

    SparseOperator k_rhs = subtract(
        add(cpw[4], add(scale(half, cpw[3]), scale(Rational(m - 8) / (2 * d2sq), cpw[2]))),
        scale(Rational(m - 4) / d2cb, cp));
    rec.add(scale(Rational(m - 4) / d2cb, K) == k_rhs, "k-recovery",
            "(M-4)/(M-2)^3 K = C+^4 + C+^3/2 + (M-8)/(2(M-2)^2) C+^2 - (M-4)/(M-2)^3 C+");

    SparseOperator quartic = add(
        add(cpw[4], scale(Rational(3, 2), cpw[3])),
        add(scale(Rational((m + 1) * (m - 4)) / (2 * d2sq), cpw[2]),
            subtract(scale(Rational(Integer(m) * m - 12 * m + 24) / (2 * d2cb), cp),
                     scale(Rational(m - 4) / (2 * d2cb), add(I, P)))));
    rec.add(quartic.is_zero(), "cplus-quartic",
            "C+^4 + 3/2 C+^3 + (M+1)(M-4)/(2(M-2)^2) C+^2 + (M^2-12M+24)/(2(M-2)^3) C+ = (M-4)/(2(M-2)^3)(I+P)");

    SparseOperator quintic = add(
        add(cpw[5], scale(Rational(3, 2), cpw[4])),
        add(scale(Rational((m + 1) * (m - 4)) / (2 * d2sq), cpw[3]),
            subtract(scale(Rational(Integer(m) * m - 12 * m + 24) / (2 * d2cb), cpw[2]),
                     scale(Rational(m - 4) / d2cb, cp))));
    rec.add(quintic.is_zero(), "cplus-quintic", "degree-5 relation for C+");

    SparseOperator sextic_rhs = add(
        add(scale(Rational(7 * Integer(m) * m - 30 * m + 44) / (4 * d2sq), cpw[4]),
            scale(Rational(3 * Integer(m) * m * m - 17 * m * m + 30 * m - 24) / (4 * d2cb),
                  cpw[3])),
        subtract(scale(Rational(3 * Integer(m) * m - 32 * m + 56) / (4 * d2cb), cpw[2]),
                 scale(Rational(3 * (m - 4)) / (2 * d2cb), cp)));
    rec.add(cpw[6] == sextic_rhs, "cplus-sextic", "C+^6 in terms of C+^4..C+");
  } else {
    for (const char* nm : {"cplus-cubic", "k-recovery", "cplus-quartic", "cplus-quintic",
                           "cplus-sextic"})
      rec.add_skip(nm, "C+ power relations", "not-applicable: M=8");
  }

  if (m == 4) {
    SparseOperator rhs = add(scale(-half, cpw[2]), scale(half, cp));
    rec.add(cpw[3] == rhs, "cplus-cubic-m4", "C+^3 = -C+^2/2 + C+/2");
  } else {
    rec.add_skip("cplus-cubic-m4", "C+^3 = -C+^2/2 + C+/2", "only-M=4");
  }

  // reduced characteristic identities where roots collide
  if (m == 4 || m == 6) {
    auto roots = generic_roots(m);
    std::vector<Rational> distinct;
    for (const Rational& r : roots)
      if (std::find(distinct.begin(), distinct.end(), r) == distinct.end())
        distinct.push_back(r);
    auto powers = operator_powers(bundle.c_ad, I, static_cast<int>(distinct.size()));
    bool ok = poly_eval(poly_from_roots(distinct), powers).is_zero();
    rec.add(ok, "reduced-characteristic",
            "minimal-degree identity at collided roots (degree " +
                std::to_string(distinct.size()) + ")");
  } else {
    rec.add_skip("reduced-characteristic", "minimal-degree identity", "roots-distinct");
  }

  return rec;
}

namespace {

struct GenericOps {
  SparseOperator p1, p2, p3, p4, p5, p6;
};

GenericOps generic_projector_ops(const CasimirBundle& b, const SparseOperator& cp2) {
  int m = b.spec.m;
  Rational half(1, 2);
  Rational M(m), d2(m - 2), d8(m - 8);
  SparseOperator ip = add(b.op_I, b.op_P);
  GenericOps g;
  g.p1 = add(scale(half, subtract(b.op_I, b.op_P)), scale(Rational(2), b.c_minus));
  g.p2 = scale(Rational(-2), b.c_minus);
  g.p3 = scale(Rational(2) / (M * (M - 1)), b.op_K);
  g.p4 = add(add(scale(Rational(2) * d2 / 3, cp2), scale(M / 3, b.c_plus)),
             subtract(scale((M - 4) / (3 * d2), ip),
                      scale(Rational(2) * (M - 4) / (3 * d2 * (M - 1)), b.op_K)));
  g.p5 = add(add(scale(Rational(-2) * d2 * d2 / (3 * d8), cp2),
                 scale(-d2 * (M - 6) / (3 * d8), b.c_plus)),
             add(scale((M - 4) / (6 * d8), ip), scale(Rational(2) / (3 * d8), b.op_K)));
  g.p6 = add(add(scale(Rational(4) * d2 / d8, cp2), scale(Rational(4) / d8, b.c_plus)),
             subtract(scale(Rational(-4) / (d2 * d8), ip),
                      scale(Rational(8) * (M - 4) / (M * d2 * d8), b.op_K)));
  return g;
}

}  // namespace

ProjectorSystem projectors_generic(const CasimirBundle& bundle) {
  int m = bundle.spec.m;
  if (m == 8)
    throw NeedsSo8Refinement(
        "so(8): the fifth and sixth closed-form projectors have an (M-8) pole; use so8_system");

  SparseOperator cp2 = compose(bundle.c_plus, bundle.c_plus);
  GenericOps g = generic_projector_ops(bundle, cp2);
  auto roots = generic_roots(m);
  auto dims = generic_dims(m);

  ProjectorSystem sys;
  sys.spec = bundle.spec;
  const SparseOperator* ops[6] = {&g.p1, &g.p2, &g.p3, &g.p4, &g.p5, &g.p6};
  for (int i = 0; i < 6; ++i) {
    ProjectorItem item;
    item.label = "proj" + std::to_string(i + 1);
    item.op = *ops[i];
    item.eigenvalue = roots[static_cast<std::size_t>(i)];
    item.expected_dim = static_cast<long long>(numerator(dims[static_cast<std::size_t>(i)]));
    item.primitive = true;
    sys.items.push_back(std::move(item));
  }

  // primitivity and zero-projector bookkeeping for the low-rank algebras
  if (m == 3) {
    sys.items[0].primitive = sys.items[3].primitive = sys.items[4].primitive = false;
  } else if (m == -2) {
    sys.items[0].primitive = sys.items[3].primitive = sys.items[5].primitive = false;
  } else if (m == 4) {
    sys.items[1].primitive = sys.items[3].primitive = false;  // ad = 3+3, proj4 = 5+5
  } else if (m == 6) {
    sys.items[0].primitive = false;  // 45 + 45'
  }

  // spectral cross-check, valid only when all six roots are distinct
  bool degenerate = (m == 3 || m == -2 || m == 4 || m == 6);
  if (!degenerate) {
    auto powers = operator_powers(bundle.c_ad, bundle.op_I, 5);
    for (int j = 0; j < 6; ++j) {
      std::vector<Rational> other;
      Rational denom(1);
      for (int i = 0; i < 6; ++i) {
        if (i == j) continue;
        other.push_back(roots[static_cast<std::size_t>(i)]);
        denom *= roots[static_cast<std::size_t>(j)] - roots[static_cast<std::size_t>(i)];
      }
      std::vector<Rational> poly = poly_from_roots(other);
      for (Rational& c : poly) c /= denom;
      if (poly_eval(poly, powers) != *ops[static_cast<std::size_t>(j)])
        throw IdentityViolation(bundle.spec.name() + ": spectral formula disagrees with proj" +
                                std::to_string(j + 1));
    }
  }
  return sys;
}

SparseOperator projector5_closed(const AlgebraSpec& spec) {
  int n = spec.n;
  Rational eps(spec.epsilon);
  SparseOperator pp = compose(sym_projector(spec, 4, 1, 2), sym_projector(spec, 4, 3, 4));
  SparseOperator sum_p = add(add(permutation(n, 4, 1, 4), permutation(n, 4, 2, 3)),
                             add(permutation(n, 4, 1, 3), permutation(n, 4, 2, 4)));
  SparseOperator core =
      add(subtract(identity_op(n, 4), scale(eps, sum_p)),
          compose(permutation(n, 4, 1, 3), permutation(n, 4, 2, 4)));
  return scale(Rational(1, 6), compose(core, pp));
}

SparseOperator projector6_closed(const AlgebraSpec& spec) {
  int n = spec.n;
  int m = spec.m;
  SparseOperator pp = compose(sym_projector(spec, 4, 1, 2), sym_projector(spec, 4, 3, 4));
  SparseOperator bracket = subtract(
      scale(Rational(1, 2), add(identity_op(n, 4),
                                scale(Rational(spec.epsilon), permutation(n, 4, 2, 4)))),
      scale(Rational(1) / m, contraction(spec, 4, 2, 4)));
  SparseOperator core = compose(contraction(spec, 4, 1, 3), bracket);
  return scale(Rational(4) / (m - 2), compose(pp, compose(core, pp)));
}

ProjectorSystem so8_system(const CasimirBundle& bundle) {
  if (bundle.spec.family != Family::Orthogonal || bundle.spec.n != 8)
    throw WrongAlgebra("so8_system requires so(8), got " + bundle.spec.name());

  const SparseOperator& I = bundle.op_I;
  const SparseOperator& P = bundle.op_P;
  const SparseOperator& K = bundle.op_K;
  Rational half(1, 2);

  SparseOperator a4 = compress_to_adjoint(bundle.spec, antisymmetrizer(8, 4));
  SparseOperator e4 = compress_to_adjoint(bundle.spec, epsilon_operator(4));

  SparseOperator ip = add(I, P);
  SparseOperator p4prime = subtract(scale(Rational(1, 6), ip),
                                    add(scale(Rational(2), bundle.c_plus), scale(Rational(1, 12), K)));

  ProjectorSystem sys;
  sys.spec = bundle.spec;
  auto push = [&](std::string label, SparseOperator op, Rational eig, long long dim) {
    sys.items.push_back(ProjectorItem{std::move(label), std::move(op), eig, dim, true});
  };
  push("p1", add(scale(half, subtract(I, P)), scale(Rational(2), bundle.c_minus)), Rational(0), 350);
  push("p2", scale(Rational(-2), bundle.c_minus), Rational(-1, 2), 28);
  push("p3", scale(Rational(1, 28), K), Rational(-1), 1);
  push("p6", subtract(p4prime, a4), Rational(-1, 3), 35);
  push("sd", scale(half, add(a4, e4)), Rational(-1, 3), 35);
  push("asd", scale(half, subtract(a4, e4)), Rational(-1, 3), 35);
  push("p5", add(scale(Rational(1, 3), ip),
                 add(scale(Rational(2), bundle.c_plus), scale(Rational(1, 21), K))),
       Rational(1, 6), 300);
  return sys;
}

std::vector<long long> dimensions(const ProjectorSystem& system) {
  std::vector<long long> out;
  Rational total(0);
  for (const ProjectorItem& item : system.items) {
    Rational t = trace(item.op);
    if (!is_integer(t) || t < 0)
      throw NonIntegerTrace(system.spec.name() + ": trace of " + item.label + " is " +
                            rat_str(t));
    total += t;
    out.push_back(static_cast<long long>(numerator(t)));
  }
  Integer m(system.spec.m);
  if (total != Rational(m * m * (m - 1) * (m - 1), 4))
    throw IdentityViolation(system.spec.name() + ": projector traces do not resolve tr I");
  return out;
}

}  // namespace casimir
