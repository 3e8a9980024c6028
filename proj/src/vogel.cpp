#include "casimir/vogel.hpp"

#include "casimir/errors.hpp"

namespace casimir {

namespace {

Rational y2_dim(const Rational& a, const Rational& b, const Rational& g, const Rational& t) {
  // dim Y2 for the distinguished parameter a against the other two (b, g)
  Rational num = (3 * a - 2 * t) * (b - 2 * t) * (g - 2 * t) * t * (b + t) * (g + t);
  Rational den = a * a * (a - b) * b * (a - g) * g;
  if (den == 0) throw DegenerateVogelPoint("vanishing denominator in a Y2 dimension");
  return -num / den;
}

}  // namespace

UniversalDecomposition universal_decomposition(const VogelPoint& point) {
  const Rational &a = point.alpha, &b = point.beta, &g = point.gamma, &t = point.t;
  if (t == 0) throw DegenerateVogelPoint("t = 0");
  if (a == 0 || b == 0 || g == 0) throw DegenerateVogelPoint("zero Vogel parameter");
  Rational dim_ad = (a - 2 * t) * (b - 2 * t) * (g - 2 * t) / (a * b * g);

  UniversalDecomposition d;
  d.point = point;
  auto push = [&](std::string label, Rational dim, Rational c2) {
    d.pieces.push_back(UniversalPiece{std::move(label), std::move(dim), c2, c2 / 2 - 1});
  };
  push("T0", Rational(1), Rational(0));
  push("Y2a", y2_dim(a, b, g, t), 2 - a / t);
  push("Y2b", y2_dim(b, a, g, t), 2 - b / t);
  push("Y2g", y2_dim(g, b, a, t), 2 - g / t);
  push("ad", dim_ad, Rational(1));
  push("X2", dim_ad * (dim_ad - 3) / 2, Rational(2));

  for (const UniversalPiece& p : d.pieces)
    if (!is_integer(p.dim) || p.dim < 0)
      throw DegenerateVogelPoint("non-integral piece dimension " + rat_str(p.dim) + " for " +
                                 p.label);
  return d;
}

std::map<std::string, std::string> correspondence(const AlgebraSpec& spec) {
  std::map<std::string, std::string> map{
      {"proj1", "X2"}, {"proj2", "ad"}, {"proj3", "T0"}, {"proj6", "Y2g"}};
  if (spec.family == Family::Symplectic) {
    map["proj4"] = "Y2b";
    map["proj5"] = "Y2a";
  } else {
    map["proj4"] = "Y2a";
    map["proj5"] = "Y2b";
  }
  return map;
}

VerificationRecord cross_check(const AlgebraSpec& spec, const ProjectorSystem& system) {
  VerificationRecord rec;
  rec.subject = spec.name();
  UniversalDecomposition dec;
  try {
    dec = universal_decomposition(vogel_point(spec));
  } catch (const DegenerateVogelPoint& e) {
    rec.add_skip("vogel-cross-check", "universal dimensions vs projector traces",
                 std::string("degenerate-point: ") + e.what());
    return rec;
  }
  auto piece_of = [&](const std::string& label) -> const UniversalPiece& {
    auto map = correspondence(spec);
    for (const UniversalPiece& p : dec.pieces)
      if (p.label == map.at(label)) return p;
    throw Error("no piece for " + label);
  };
  Rational total(0);
  for (const UniversalPiece& p : dec.pieces) total += p.dim;
  Rational dim_ad = dec.pieces[4].dim;
  rec.add(total == dim_ad * dim_ad, "vogel-dim-sum", "sum of piece dims = (dim ad)^2",
          rat_str(total));
  for (const ProjectorItem& item : system.items) {
    const UniversalPiece& p = piece_of(item.label);
    rec.add(trace(item.op) == p.dim, "vogel-dim-" + item.label,
            item.label + " trace = dim " + p.label, rat_str(p.dim));
    bool eig_ok = item.eigenvalue && *item.eigenvalue == p.c_hat;
    rec.add(eig_ok, "vogel-eig-" + item.label,
            item.label + " eigenvalue = c2(" + p.label + ")/2 - 1", rat_str(p.c_hat));
  }
  return rec;
}

}  // namespace casimir
