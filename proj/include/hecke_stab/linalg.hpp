#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "hecke_stab/error.hpp"
#include "hecke_stab/matrix.hpp"
#include "hecke_stab/poly.hpp"
#include "hecke_stab/scalar.hpp"

namespace hecke_stab {

// Sparse vector with polynomial entries, used inside fraction-free elimination.
using PolyVec = std::vector<std::pair<Index, Poly>>;

namespace detail {

// Returns (w, L) with w = L * v and w polynomial.
inline std::pair<PolyVec, Poly> clear_denominators(const SVec& v) {
  Poly lcm(1);
  for (const auto& [i, x] : v) {
    if (x.den().is_one()) continue;
    const Poly g = Poly::gcd(lcm, x.den());
    lcm = lcm * x.den().exact_div(g);
  }
  PolyVec w;
  w.reserve(v.size());
  for (const auto& [i, x] : v) {
    if (x.den().is_one())
      w.emplace_back(i, lcm.is_one() ? x.num() : x.num() * lcm);
    else
      w.emplace_back(i, x.num() * lcm.exact_div(x.den()));
  }
  return {std::move(w), std::move(lcm)};
}

// a*x - b*y
inline PolyVec cross_subtract(const Poly& a, const PolyVec& x, const Poly& b, const PolyVec& y) {
  PolyVec r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  const bool a_one = a.is_one();
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      r.emplace_back(x[i].first, a_one ? x[i].second : a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      r.emplace_back(y[j].first, -(b * y[j].second));
      ++j;
    } else {
      Poly v = a_one ? x[i].second : a * x[i].second;
      v -= b * y[j].second;
      if (!v.is_zero()) r.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

// Divides w by its content (monic polynomial gcd times the leading rational of
// its first entry) and returns that divisor.
inline Poly make_primitive(PolyVec& w) {
  if (w.empty()) return Poly(1);
  Poly g = w[0].second.monic();
  for (std::size_t k = 1; k < w.size() && !g.is_constant(); ++k) g = Poly::gcd(g, w[k].second);
  if (!g.is_constant()) {
    for (auto& [i, p] : w) p = p.exact_div(g);
  }
  const mpq_class lead = w[0].second.lead();
  if (lead != 1) {
    const mpq_class inv = 1 / lead;
    for (auto& [i, p] : w) p = p.scaled(inv);
  }
  return g.is_constant() ? Poly(lead) : g.scaled(lead);
}

inline const Poly* find_entry(const PolyVec& w, Index col) {
  auto it = std::lower_bound(w.begin(), w.end(), col, [](const auto& e, Index k) { return e.first < k; });
  return it != w.end() && it->first == col ? &it->second : nullptr;
}

inline SVec to_svec(const PolyVec& w) {
  SVec v;
  v.reserve(w.size());
  for (const auto& [i, p] : w) v.emplace_back(i, Scalar(p));
  return v;
}

}  // namespace detail

// Incrementally built basis of a subspace of Q(q)^dim.
//
// Rows are stored primitive (polynomial entries, content removed) together with
// a pivot column. Row k vanishes on the pivot columns of rows 0..k-1, so a vector
// is reduced modulo the span by sweeping the rows in insertion order. Row updates
// are fraction-free: w <- (lc/g) w - (c/g) row with g = gcd(lc, c).
class SemiEchelon {
 public:
  explicit SemiEchelon(std::size_t dim = 0) : dim_(dim), pivot_row_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<PolyVec>& rows() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  SVec row_vector(std::size_t k) const { return detail::to_svec(rows_[k]); }

  std::vector<Index> free_columns() const {
    std::vector<Index> f;
    for (std::size_t c = 0; c < dim_; ++c)
      if (pivot_row_[c] < 0) f.push_back(static_cast<Index>(c));
    return f;
  }

  // Adds v to the span; returns true when the rank grew.
  bool insert(const SVec& v) {
    if (v.empty()) return false;
    check_range(v);
    auto w = detail::clear_denominators(v).first;
    return insert_reduced(reduce_scaled(std::move(w)).first);
  }

  bool contains(const SVec& v) const {
    if (v.empty()) return true;
    check_range(v);
    return reduce_scaled(detail::clear_denominators(v).first).first.empty();
  }

  // The unique representative of v + span with zeros on every pivot column.
  SVec reduce(const SVec& v) const {
    if (v.empty()) return {};
    check_range(v);
    auto [w, lcm] = detail::clear_denominators(v);
    auto [r, mult] = reduce_scaled(std::move(w));
    // r = mult * lcm * (v mod span)
    const Scalar inv = (mult * Scalar(lcm)).inverse();
    SVec out;
    out.reserve(r.size());
    for (const auto& [i, p] : r) out.emplace_back(i, Scalar(p) * inv);
    return out;
  }

  // Coefficients c with v = sum_k c_k row_k; throws "not in span" otherwise.
  std::vector<Scalar> coordinates(const SVec& v) const {
    std::vector<Scalar> c(rows_.size());
    SVec rest = v;
    for (std::size_t k = 0; k < rows_.size() && !rest.empty(); ++k) {
      const Scalar x = entry(rest, pivots_[k]);
      if (x.is_zero()) continue;
      const Scalar lc(*detail::find_entry(rows_[k], pivots_[k]));
      c[k] = x / lc;
      rest = combine(1, rest, -c[k], detail::to_svec(rows_[k]));
    }
    if (!rest.empty()) throw Error("not in span");
    return c;
  }

 private:
  void check_range(const SVec& v) const {
    if (v.back().first >= dim_) throw Error("shape", "vector longer than ambient space");
  }

  // Returns (r, mult) with r = mult * (w mod span), r primitive or empty.
  std::pair<PolyVec, Scalar> reduce_scaled(PolyVec w) const {
    Scalar mult(1);
    for (std::size_t k = 0; k < rows_.size() && !w.empty(); ++k) {
      const Poly* c = detail::find_entry(w, pivots_[k]);
      if (c == nullptr) continue;
      const Poly& lc = *detail::find_entry(rows_[k], pivots_[k]);
      Poly a = lc, b = *c;
      if (!lc.is_constant() && !c->is_constant()) {
        const Poly g = Poly::gcd(lc, *c);
        if (!g.is_one()) {
          a = lc.exact_div(g);
          b = c->exact_div(g);
        }
      } else if (lc.is_constant()) {
        a = Poly(1);
        b = c->scaled(1 / lc.lead());
      }
      w = detail::cross_subtract(a, w, b, rows_[k]);
      if (!a.is_one()) mult *= Scalar(a);
      if (!w.empty()) {
        const Poly content = detail::make_primitive(w);
        if (!content.is_one()) mult /= Scalar(content);
      }
    }
    return {std::move(w), std::move(mult)};
  }

  bool insert_reduced(PolyVec w) {
    if (w.empty()) return false;
    std::size_t best = 0;
    auto key = [&](std::size_t k) {
      return std::make_tuple(w[k].second.degree(), w[k].second.terms(), w[k].first);
    };
    for (std::size_t k = 1; k < w.size(); ++k)
      if (key(k) < key(best)) best = k;
    const Index p = w[best].first;
    pivot_row_[p] = static_cast<long>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(w));
    return true;
  }

  std::size_t dim_;
  std::vector<long> pivot_row_;
  std::vector<Index> pivots_;
  std::vector<PolyVec> rows_;
};

// How ranks are computed. Specialized mode evaluates at random rational points
// q0 outside {0, 1, -1}; it is an opt-in accelerator and never the default.
struct RankMode {
  enum class Kind { exact, specialized };
  Kind kind = Kind::exact;
  int count = 3;
  std::uint64_t seed = 1;

  static RankMode exact() { return {}; }
  static RankMode specialized(int count, std::uint64_t seed) { return {Kind::specialized, count, seed}; }
};

inline std::size_t rational_rank(std::vector<std::vector<mpq_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t exact_rank(const ExactMatrix& m) {
  if (m.rows() <= m.cols()) {
    SemiEchelon e(m.rows());
    for (const auto& col : m.columns()) e.insert(col);
    return e.rank();
  }
  const ExactMatrix t = m.transpose();
  SemiEchelon e(t.rows());
  for (const auto& col : t.columns()) e.insert(col);
  return e.rank();
}

inline std::size_t rank(const ExactMatrix& m, const RankMode& mode = RankMode::exact()) {
  if (mode.kind == RankMode::Kind::exact) return exact_rank(m);
  if (mode.count < 1) throw Error("bad mode", "specialization count must be positive");
  std::mt19937_64 rng(mode.seed);
  auto draw = [&]() {
    for (;;) {
      const long num = static_cast<long>(rng() % 101) - 50;
      const long den = static_cast<long>(rng() % 19) + 2;
      mpq_class q0(num, den);
      q0.canonicalize();
      if (q0 == 0 || q0 == 1 || q0 == -1) continue;
      try {
        return std::make_pair(q0, rational_rank(m.specialize(q0)));
      } catch (const Error&) {
        continue;  // pole at q0
      }
    }
  };
  std::size_t best = 0;
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<std::size_t> seen;
    for (int i = 0; i < mode.count; ++i) seen.push_back(draw().second);
    const bool agree = std::all_of(seen.begin(), seen.end(), [&](std::size_t r) { return r == seen[0]; });
    for (auto r : seen) best = std::max(best, r);
    if (agree) return best;
  }
  throw Error("unstable specialization");
}

// Basis of the right null space, each vector cleared of denominators.
inline std::vector<SVec> kernel_basis(const ExactMatrix& m) {
  const ExactMatrix rows = m.transpose();  // columns of `rows` are the rows of m
  SemiEchelon e(m.cols());
  for (const auto& r : rows.columns()) e.insert(r);
  std::vector<SVec> basis;
  for (const Index f : e.free_columns()) {
    std::vector<Scalar> x(m.cols());
    x[f] = Scalar(1);
    for (std::size_t k = e.rank(); k-- > 0;) {
      const PolyVec& row = e.rows()[k];
      const Index p = e.pivots()[k];
      Scalar acc;
      Scalar lc;
      for (const auto& [c, val] : row) {
        if (c == p)
          lc = Scalar(val);
        else if (!x[c].is_zero())
          acc += Scalar(val) * x[c];
      }
      x[p] = -acc / lc;
    }
    SVec v;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) v.emplace_back(static_cast<Index>(i), x[i]);
    auto w = detail::clear_denominators(v).first;
    detail::make_primitive(w);
    basis.push_back(detail::to_svec(w));
  }
  return basis;
}

// Quotient of Q(q)^dim by span(subspace), in coordinates given by the free
// (non-pivot) columns of the subspace's echelon form.
struct Quotient {
  SemiEchelon sub;
  std::vector<Index> free;         // ambient coordinates kept by the quotient
  std::vector<long> free_index;    // ambient coordinate -> quotient coordinate or -1
  ExactMatrix projection;          // (dim - rank) x dim

  std::size_t dim() const { return free.size(); }

  SVec project(const SVec& v) const {
    SVec out;
    for (const auto& [i, x] : sub.reduce(v))
      if (free_index[i] >= 0) out.emplace_back(static_cast<Index>(free_index[i]), x);
      else throw Error("internal", "reduced vector has a pivot coordinate");
    return out;
  }

  // Section of the projection: quotient basis vector k -> ambient unit vector.
  SVec lift(Index k) const { return unit_vector(free[k]); }

  // Matrix of the map induced by `map` (ambient -> ambient of `target`).
  ExactMatrix induced(const ExactMatrix& map, const Quotient& target) const {
    std::vector<SVec> cols;
    cols.reserve(dim());
    for (std::size_t k = 0; k < dim(); ++k) cols.push_back(target.project(map.column(free[k])));
    return ExactMatrix::from_columns(target.dim(), std::move(cols));
  }
};

inline Quotient make_quotient(std::size_t dim, SemiEchelon sub) {
  if (sub.dim() != dim) throw Error("shape", "subspace ambient dimension");
  Quotient q{std::move(sub), {}, std::vector<long>(dim, -1), ExactMatrix()};
  q.free = q.sub.free_columns();
  for (std::size_t k = 0; k < q.free.size(); ++k) q.free_index[q.free[k]] = static_cast<long>(k);
  std::vector<SVec> cols(dim);
  for (std::size_t j = 0; j < dim; ++j) cols[j] = q.project(unit_vector(static_cast<Index>(j)));
  q.projection = ExactMatrix::from_columns(q.free.size(), std::move(cols));
  return q;
}

inline Quotient make_quotient(std::size_t dim, const std::vector<SVec>& spanning) {
  SemiEchelon sub(dim);
  for (const auto& v : spanning) sub.insert(v);
  return make_quotient(dim, std::move(sub));
}

struct QuotientStructure {
  Quotient quotient;
  std::vector<ExactMatrix> induced_maps;
};

// Quotient by a subspace together with the maps it induces; every map must
// preserve the subspace ("not invariant" otherwise).
inline QuotientStructure quotient_structure(std::size_t dim, const std::vector<SVec>& subspace,
                                            const std::vector<ExactMatrix>& maps) {
  for (const auto& m : maps)
    if (m.rows() != dim || m.cols() != dim) throw Error("shape", "map must act on the ambient space");
  QuotientStructure out{make_quotient(dim, subspace), {}};
  for (const auto& m : maps) {
    for (std::size_t k = 0; k < out.quotient.sub.rank(); ++k)
      if (!out.quotient.project(m.apply(out.quotient.sub.row_vector(k))).empty()) throw Error("not invariant");
    out.induced_maps.push_back(out.quotient.induced(m, out.quotient));
  }
  return out;
}

}  // namespace hecke_stab
