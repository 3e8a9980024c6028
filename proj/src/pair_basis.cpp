#include "casimir/pair_basis.hpp"

#include "casimir/errors.hpp"

namespace casimir {

AdjointBasis adjoint_basis(const AlgebraSpec& spec) {
  AdjointBasis b;
  b.spec = spec;
  for (int i = 0; i < spec.n; ++i)
    for (int j = i; j < spec.n; ++j) {
      if (i == j && spec.family == Family::Orthogonal) continue;
      b.labels.emplace_back(i, j);
    }
  return b;
}

int AdjointBasis::index_of(int a, int b) const {
  // lexicographic labels admit a closed-form position, but a scan keeps the
  // enumeration the single source of truth
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == std::make_pair(a, b)) return static_cast<int>(i);
  return -1;
}

namespace {

struct PairIndexer {
  int n;
  int eps;
  std::vector<int> pos;  // (a*n+b) -> label index for canonical labels, else -1
  std::vector<std::pair<int, int>> labels;

  explicit PairIndexer(const AlgebraSpec& spec) : n(spec.n), eps(spec.epsilon) {
    AdjointBasis b = adjoint_basis(spec);
    labels = b.labels;
    pos.assign(static_cast<std::size_t>(n) * n, -1);
    for (std::size_t i = 0; i < labels.size(); ++i)
      pos[static_cast<std::size_t>(labels[i].first) * n + labels[i].second] = static_cast<int>(i);
  }
  int canonical(int a, int b) const { return pos[static_cast<std::size_t>(a) * n + b]; }
};

}  // namespace

SparseOperator compress_to_adjoint(const AlgebraSpec& spec, const SparseOperator& x4) {
  if (x4.rank() != 4 || x4.site_dim() != spec.n)
    throw ShapeMismatch("compress_to_adjoint expects a rank-4 operator on V_" + std::to_string(spec.n));
  PairIndexer ix(spec);
  int n = spec.n;
  int d = static_cast<int>(ix.labels.size());
  OperatorBuilder builder(d, 2);
  Rational meps(-spec.epsilon);
  x4.for_each([&](Index r, Index c, const Rational& v) {
    std::vector<int> ri = unflatten(r, n, 4);
    // read rows only at canonical pair indices
    int ra = ix.canonical(ri[0], ri[1]);
    int rb = ix.canonical(ri[2], ri[3]);
    if (ra < 0 || rb < 0) return;
    std::vector<int> ci = unflatten(c, n, 4);
    Rational w = v;
    int ca = ix.canonical(ci[0], ci[1]);
    if (ca < 0) {
      ca = ix.canonical(ci[1], ci[0]);
      if (ca < 0) return;  // diagonal orthogonal column: zero on the corner
      w *= meps;
    }
    int cb = ix.canonical(ci[2], ci[3]);
    if (cb < 0) {
      cb = ix.canonical(ci[3], ci[2]);
      if (cb < 0) return;
      w *= meps;
    }
    builder.add(static_cast<Index>(ra) * d + rb, static_cast<Index>(ca) * d + cb, std::move(w));
  });
  return std::move(builder).build();
}

SparseOperator expand_from_adjoint(const AlgebraSpec& spec, const SparseOperator& y2) {
  AdjointBasis basis = adjoint_basis(spec);
  int d = basis.dim();
  if (y2.rank() != 2 || y2.site_dim() != d)
    throw ShapeMismatch("expand_from_adjoint expects a rank-2 operator on the adjoint space");
  int n = spec.n;
  Rational meps(-spec.epsilon), half(1, 2);
  // w_A components (row side) and dual w^C components (column side)
  auto row_parts = [&](int lab) {
    const auto& [a, b] = basis.labels[static_cast<std::size_t>(lab)];
    std::vector<std::pair<Index, Rational>> out;
    out.emplace_back(static_cast<Index>(a) * n + b, Rational(1));
    if (a != b) out.emplace_back(static_cast<Index>(b) * n + a, meps);
    return out;
  };
  auto col_parts = [&](int lab) {
    const auto& [a, b] = basis.labels[static_cast<std::size_t>(lab)];
    std::vector<std::pair<Index, Rational>> out;
    if (a == b) {
      out.emplace_back(static_cast<Index>(a) * n + b, Rational(1));
    } else {
      out.emplace_back(static_cast<Index>(a) * n + b, half);
      out.emplace_back(static_cast<Index>(b) * n + a, half * meps);
    }
    return out;
  };
  OperatorBuilder builder(n, 4);
  Index nn = static_cast<Index>(n) * n;
  y2.for_each([&](Index r, Index c, const Rational& v) {
    int ra = static_cast<int>(r / d), rb = static_cast<int>(r % d);
    int ca = static_cast<int>(c / d), cb = static_cast<int>(c % d);
    for (const auto& [r1, w1] : row_parts(ra))
      for (const auto& [r2, w2] : row_parts(rb))
        for (const auto& [c1, u1] : col_parts(ca))
          for (const auto& [c2, u2] : col_parts(cb))
            builder.add(r1 * nn + r2, c1 * nn + c2, v * w1 * w2 * u1 * u2);
  });
  return std::move(builder).build();
}

}  // namespace casimir
