#include "casimir/algebra.hpp"

#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string rat_frac_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << '/' << denominator(r);
  return os.str();
}

Rational parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

std::string AlgebraSpec::name() const {
  std::ostringstream os;
  os << (family == Family::Orthogonal ? "so(" : "sp(") << n << ')';
  return os.str();
}

AlgebraSpec make_spec(Family family, int n, int max_n) {
  if (family == Family::Symplectic && n % 2 != 0)
    throw SymplecticOddDimension("sp(" + std::to_string(n) + "): symplectic dimension must be even");
  if (family == Family::Orthogonal && n < 3)
    throw DimensionTooSmall("so(" + std::to_string(n) + "): need n >= 3");
  if (family == Family::Symplectic && n < 2)
    throw DimensionTooSmall("sp(" + std::to_string(n) + "): need n >= 2");
  if (n > max_n)
    throw DimensionTooLarge("n = " + std::to_string(n) + " exceeds cap " + std::to_string(max_n));
  int eps = family == Family::Orthogonal ? 1 : -1;
  return AlgebraSpec{family, n, eps, eps * n};
}

Rational MetricTensor::entry(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? Rational(0) : it->second;
}

Rational MetricTensor::inverse(int i, int j) const {
  auto it = inverse_entries.find({i, j});
  return it == inverse_entries.end() ? Rational(0) : it->second;
}

MetricTensor metric(const AlgebraSpec& spec) {
  MetricTensor g;
  g.dim = spec.n;
  g.epsilon = spec.epsilon;
  g.lower_.resize(spec.n);
  g.raise_.resize(spec.n);
  if (spec.family == Family::Orthogonal) {
    for (int i = 0; i < spec.n; ++i) {
      g.entries[{i, i}] = 1;
      g.inverse_entries[{i, i}] = 1;
      g.lower_[i] = {i, 1};
      g.raise_[i] = {i, 1};
    }
  } else {
    int r = spec.n / 2;
    for (int i = 0; i < r; ++i) {
      g.entries[{i, i + r}] = 1;
      g.entries[{i + r, i}] = -1;
      g.inverse_entries[{i, i + r}] = -1;
      g.inverse_entries[{i + r, i}] = 1;
      g.lower_[i] = {i + r, 1};
      g.lower_[i + r] = {i, -1};
      g.raise_[i] = {i + r, -1};
      g.raise_[i + r] = {i, 1};
    }
  }
  return g;
}

VogelPoint vogel_point(const AlgebraSpec& spec) {
  if (spec.family == Family::Symplectic) {
    int r = spec.n / 2;
    return VogelPoint{-2, 1, r + 2, r + 1};
  }
  if (spec.n % 2 == 1) {
    int r = (spec.n - 1) / 2;
    return VogelPoint{-2, 4, 2 * r - 3, 2 * r - 1};
  }
  int r = spec.n / 2;
  return VogelPoint{-2, 4, 2 * r - 4, 2 * r - 2};
}

VogelPoint sl_vogel_point(int r) {
  return VogelPoint{-2, 2, r + 1, r + 1};
}

}  // namespace casimir
