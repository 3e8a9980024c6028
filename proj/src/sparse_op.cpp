#include "casimir/sparse_op.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

Index checked_dim(int n, int k) {
  if (n < 1 || k < 1) throw Error("operator shape needs n >= 1, k >= 1");
  Index d = 1;
  for (int s = 0; s < k; ++s) {
    if (d > (Index{1} << 46) / n) throw DimensionTooLarge("n^k too large for a sparse operator");
    d *= n;
  }
  return d;
}

void check_slots(int k, int a, int b) {
  if (a < 1 || a > k || b < 1 || b > k)
    throw SlotOutOfRange("slot out of range [1," + std::to_string(k) + "]");
  if (a == b) throw EqualSlots("slots must differ");
}

void check_shape(const SparseOperator& f, const SparseOperator& g) {
  if (f.site_dim() != g.site_dim() || f.rank() != g.rank())
    throw ShapeMismatch("operator shapes differ: n=" + std::to_string(f.site_dim()) + ",k=" +
                        std::to_string(f.rank()) + " vs n=" + std::to_string(g.site_dim()) +
                        ",k=" + std::to_string(g.rank()));
}

int permutation_parity(std::span<const int> p) {
  std::vector<char> seen(p.size(), 0);
  int parity = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0, t = s;
    while (!seen[t]) {
      seen[t] = 1;
      t = static_cast<std::size_t>(p[t]);
      ++len;
    }
    if (len % 2 == 0) parity ^= 1;
  }
  return parity;
}

}  // namespace

Index flatten(std::span<const int> idx, int n) {
  Index f = 0;
  for (int i : idx) f = f * n + i;
  return f;
}

std::vector<int> unflatten(Index flat, int n, int k) {
  std::vector<int> idx(k);
  for (int s = k - 1; s >= 0; --s) {
    idx[s] = static_cast<int>(flat % n);
    flat /= n;
  }
  return idx;
}

SparseOperator::SparseOperator(int n, int k, std::vector<Row> rows)
    : n_(n), k_(k), rows_(std::move(rows)) {
  checked_dim(n, k);
}

Index SparseOperator::dim_total() const { return checked_dim(n_, k_); }

const SparseOperator::Row* SparseOperator::find_row(Index r) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), r,
                             [](const Row& row, Index v) { return row.row < v; });
  if (it == rows_.end() || it->row != r) return nullptr;
  return &*it;
}

std::size_t SparseOperator::nnz() const {
  std::size_t c = 0;
  for (const Row& r : rows_) c += r.entries.size();
  return c;
}

Rational SparseOperator::entry(Index r, Index c) const {
  const Row* row = find_row(r);
  if (!row) return Rational(0);
  auto it = std::lower_bound(row->entries.begin(), row->entries.end(), c,
                             [](const Entry& e, Index v) { return e.col < v; });
  if (it == row->entries.end() || it->col != c) return Rational(0);
  return it->value;
}

void SparseOperator::for_each(const std::function<void(Index, Index, const Rational&)>& fn) const {
  for (const Row& r : rows_)
    for (const Entry& e : r.entries) fn(r.row, e.col, e.value);
}

void OperatorBuilder::add(Index row, Index col, Rational v) {
  if (v == 0) return;
  triplets_.emplace_back(row, col, std::move(v));
}

SparseOperator OperatorBuilder::build() && {
  std::sort(triplets_.begin(), triplets_.end(),
            [](const auto& a, const auto& b) {
              if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
              return std::get<1>(a) < std::get<1>(b);
            });
  std::vector<SparseOperator::Row> rows;
  std::size_t i = 0;
  while (i < triplets_.size()) {
    Index r = std::get<0>(triplets_[i]);
    SparseOperator::Row row{r, {}};
    while (i < triplets_.size() && std::get<0>(triplets_[i]) == r) {
      Index c = std::get<1>(triplets_[i]);
      Rational v = std::move(std::get<2>(triplets_[i]));
      ++i;
      while (i < triplets_.size() && std::get<0>(triplets_[i]) == r &&
             std::get<1>(triplets_[i]) == c) {
        v += std::get<2>(triplets_[i]);
        ++i;
      }
      if (v != 0) row.entries.push_back({c, std::move(v)});
    }
    if (!row.entries.empty()) rows.push_back(std::move(row));
  }
  return SparseOperator(n_, k_, std::move(rows));
}

SparseOperator identity_op(int n, int k) {
  Index d = checked_dim(n, k);
  std::vector<SparseOperator::Row> rows;
  rows.reserve(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) rows.push_back({i, {{i, Rational(1)}}});
  return SparseOperator(n, k, std::move(rows));
}

SparseOperator zero_op(int n, int k) { return SparseOperator(n, k, {}); }

SparseOperator permutation(int n, int k, int a, int b) {
  check_slots(k, a, b);
  Index d = checked_dim(n, k);
  OperatorBuilder builder(n, k);
  std::vector<int> idx(k);
  for (Index col = 0; col < d; ++col) {
    idx = unflatten(col, n, k);
    std::swap(idx[a - 1], idx[b - 1]);
    builder.add(flatten(idx, n), col, Rational(1));
  }
  return std::move(builder).build();
}

SparseOperator contraction(const AlgebraSpec& spec, int k, int a, int b) {
  check_slots(k, a, b);
  MetricTensor c = metric(spec);
  int n = spec.n;
  OperatorBuilder builder(n, k);
  // rows: i_b fixed by cbar^{i_a i_b} != 0; cols: j_b fixed by c_{j_a j_b} != 0;
  // all other slots diagonal.
  Index rest = checked_dim(n, k) / (Index{n} * n);
  std::vector<int> row_idx(k), col_idx(k);
  for (Index r = 0; r < rest; ++r) {
    // spread the k-2 spectator slots
    std::vector<int> spect = unflatten(r, n, k - 2);
    int s = 0;
    for (int slot = 0; slot < k; ++slot)
      if (slot != a - 1 && slot != b - 1) {
        row_idx[slot] = spect[s];
        col_idx[slot] = spect[s];
        ++s;
      }
    for (int ia = 0; ia < n; ++ia) {
      auto [ib, cu] = c.raise_partner(ia);
      row_idx[a - 1] = ia;
      row_idx[b - 1] = ib;
      for (int ja = 0; ja < n; ++ja) {
        auto [jb, cl] = c.lower_partner(ja);
        col_idx[a - 1] = ja;
        col_idx[b - 1] = jb;
        builder.add(flatten(row_idx, n), flatten(col_idx, n), cu * cl);
      }
    }
  }
  return std::move(builder).build();
}

SparseOperator sym_projector(const AlgebraSpec& spec, int k, int a, int b) {
  SparseOperator p = permutation(spec.n, k, a, b);
  return scale(Rational(1, 2), subtract(identity_op(spec.n, k), scale(Rational(spec.epsilon), p)));
}

SparseOperator antisymmetrizer(int n, int r) {
  Index d = checked_dim(n, r);
  if (r > n) return zero_op(n, r);
  Rational weight(1);
  for (int i = 2; i <= r; ++i) weight /= i;
  OperatorBuilder builder(n, r);
  std::vector<int> idx(r), perm(r), out(r);
  for (Index col = 0; col < d; ++col) {
    idx = unflatten(col, n, r);
    // columns with a repeated index antisymmetrize to zero
    bool dup = false;
    for (int i = 0; i < r && !dup; ++i)
      for (int j = i + 1; j < r; ++j)
        if (idx[i] == idx[j]) { dup = true; break; }
    if (dup) continue;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int s = 0; s < r; ++s) out[s] = idx[perm[s]];
      int sign = permutation_parity(perm) ? -1 : 1;
      builder.add(flatten(out, n), col, sign * weight);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::move(builder).build();
}

SparseOperator epsilon_operator(int r) {
  if (r % 2 != 0) throw OddRank("E_r needs even r: the (-1)^{r/2} prefactor");
  int n = 2 * r;
  checked_dim(n, r);
  Rational pref((r / 2) % 2 == 0 ? 1 : -1);
  for (int i = 2; i <= r; ++i) pref /= i;
  OperatorBuilder builder(n, r);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int sign = permutation_parity(perm) ? -1 : 1;
    Index row = flatten(std::span<const int>(perm).first(r), n);
    Index col = flatten(std::span<const int>(perm).subspan(r), n);
    builder.add(row, col, sign * pref);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::move(builder).build();
}

SparseOperator embed_pair(const SparseOperator& core, int k, int a, int b) {
  if (core.rank() != 2) throw ShapeMismatch("embed_pair needs a rank-2 core");
  check_slots(k, a, b);
  int n = core.site_dim();
  Index rest = checked_dim(n, k) / (Index{n} * n);
  OperatorBuilder builder(n, k);
  std::vector<int> row_idx(k), col_idx(k);
  core.for_each([&](Index r2, Index c2, const Rational& v) {
    std::vector<int> ri = unflatten(r2, n, 2);
    std::vector<int> ci = unflatten(c2, n, 2);
    for (Index rr = 0; rr < rest; ++rr) {
      std::vector<int> spect = unflatten(rr, n, k - 2);
      int s = 0;
      for (int slot = 0; slot < k; ++slot)
        if (slot != a - 1 && slot != b - 1) {
          row_idx[slot] = spect[s];
          col_idx[slot] = spect[s];
          ++s;
        }
      row_idx[a - 1] = ri[0];
      row_idx[b - 1] = ri[1];
      col_idx[a - 1] = ci[0];
      col_idx[b - 1] = ci[1];
      builder.add(flatten(row_idx, n), flatten(col_idx, n), v);
    }
  });
  return std::move(builder).build();
}

SparseOperator compose(const SparseOperator& f, const SparseOperator& g) {
  check_shape(f, g);
  Index d = f.dim_total();
  std::vector<Rational> acc(static_cast<std::size_t>(d));
  std::vector<char> used(static_cast<std::size_t>(d), 0);
  std::vector<Index> touched;
  std::vector<SparseOperator::Row> rows;
  for (const auto& fr : f.rows()) {
    touched.clear();
    for (const auto& fe : fr.entries) {
      const auto* gr = g.find_row(fe.col);
      if (!gr) continue;
      for (const auto& ge : gr->entries) {
        auto c = static_cast<std::size_t>(ge.col);
        if (!used[c]) {
          used[c] = 1;
          touched.push_back(ge.col);
          acc[c] = fe.value * ge.value;
        } else {
          acc[c] += fe.value * ge.value;
        }
      }
    }
    if (touched.empty()) continue;
    std::sort(touched.begin(), touched.end());
    SparseOperator::Row out{fr.row, {}};
    out.entries.reserve(touched.size());
    for (Index c : touched) {
      auto ci = static_cast<std::size_t>(c);
      if (acc[ci] != 0) out.entries.push_back({c, std::move(acc[ci])});
      acc[ci] = Rational();
      used[ci] = 0;
    }
    if (!out.entries.empty()) rows.push_back(std::move(out));
  }
  return SparseOperator(f.site_dim(), f.rank(), std::move(rows));
}

namespace {

SparseOperator merge(const SparseOperator& f, const SparseOperator& g, bool negate_g) {
  check_shape(f, g);
  std::vector<SparseOperator::Row> rows;
  auto fi = f.rows().begin(), fe = f.rows().end();
  auto gi = g.rows().begin(), ge = g.rows().end();
  auto emit_row = [&](const SparseOperator::Row& r, bool neg) {
    SparseOperator::Row out{r.row, {}};
    out.entries.reserve(r.entries.size());
    for (const auto& e : r.entries) out.entries.push_back({e.col, neg ? -e.value : e.value});
    rows.push_back(std::move(out));
  };
  while (fi != fe || gi != ge) {
    if (gi == ge || (fi != fe && fi->row < gi->row)) {
      emit_row(*fi, false);
      ++fi;
    } else if (fi == fe || gi->row < fi->row) {
      emit_row(*gi, negate_g);
      ++gi;
    } else {
      SparseOperator::Row out{fi->row, {}};
      auto a = fi->entries.begin(), ae = fi->entries.end();
      auto b = gi->entries.begin(), be = gi->entries.end();
      while (a != ae || b != be) {
        if (b == be || (a != ae && a->col < b->col)) {
          out.entries.push_back(*a);
          ++a;
        } else if (a == ae || b->col < a->col) {
          out.entries.push_back({b->col, negate_g ? -b->value : b->value});
          ++b;
        } else {
          Rational v = negate_g ? Rational(a->value - b->value) : Rational(a->value + b->value);
          if (v != 0) out.entries.push_back({a->col, std::move(v)});
          ++a;
          ++b;
        }
      }
      if (!out.entries.empty()) rows.push_back(std::move(out));
      ++fi;
      ++gi;
    }
  }
  return SparseOperator(f.site_dim(), f.rank(), std::move(rows));
}

}  // namespace

SparseOperator add(const SparseOperator& f, const SparseOperator& g) { return merge(f, g, false); }

SparseOperator subtract(const SparseOperator& f, const SparseOperator& g) { return merge(f, g, true); }

SparseOperator scale(const Rational& s, const SparseOperator& f) {
  if (s == 0) return zero_op(f.site_dim(), f.rank());
  std::vector<SparseOperator::Row> rows;
  rows.reserve(f.rows().size());
  for (const auto& r : f.rows()) {
    SparseOperator::Row out{r.row, {}};
    out.entries.reserve(r.entries.size());
    for (const auto& e : r.entries) out.entries.push_back({e.col, s * e.value});
    rows.push_back(std::move(out));
  }
  return SparseOperator(f.site_dim(), f.rank(), std::move(rows));
}

Rational trace(const SparseOperator& f) {
  Rational t(0);
  for (const auto& r : f.rows()) {
    auto it = std::lower_bound(r.entries.begin(), r.entries.end(), r.row,
                               [](const SparseOperator::Entry& e, Index v) { return e.col < v; });
    if (it != r.entries.end() && it->col == r.row) t += it->value;
  }
  return t;
}

void write_sparse(std::ostream& os, const SparseOperator& op) {
  os << "SPARSEOP n=" << op.site_dim() << " k=" << op.rank() << " nnz=" << op.nnz() << '\n';
  op.for_each([&](Index r, Index c, const Rational& v) {
    os << r << ' ' << c << ' ' << rat_frac_str(v) << '\n';
  });
}

SparseOperator read_sparse(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw Error("sparse read: missing header");
  int n = 0, k = 0;
  long long nnz = -1;
  if (std::sscanf(header.c_str(), "SPARSEOP n=%d k=%d nnz=%lld", &n, &k, &nnz) != 3)
    throw Error("sparse read: bad header: " + header);
  OperatorBuilder builder(n, k);
  for (long long i = 0; i < nnz; ++i) {
    long long r, c;
    std::string frac;
    if (!(is >> r >> c >> frac)) throw Error("sparse read: truncated entry list");
    builder.add(r, c, parse_rat(frac));
  }
  SparseOperator op = std::move(builder).build();
  if (static_cast<long long>(op.nnz()) != nnz) throw Error("sparse read: duplicate or zero entries");
  return op;
}

}  // namespace casimir
