#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hecke_stab/cosets.hpp"
#include "hecke_stab/error.hpp"
#include "hecke_stab/linalg.hpp"
#include "hecke_stab/module.hpp"
#include "hecke_stab/partitions.hpp"

namespace hecke_stab {

inline constexpr int kDefaultSpechtBound = 7;

struct SpechtModule {
  Partition lambda;
  std::vector<Tableau> basis;  // syt_enumerate order
  ModulePresentation presentation;
};

namespace detail {

// Diagonal coefficient of T_{s_i} on v_t when i and i+1 are in different rows
// and columns: (q-1) / (1 - q^{-r}), r = content(i+1) - content(i). It is q
// for r = 1 and -1 for r = -1, matching the row and column cases.
inline Scalar seminormal_diagonal(int r) {
  return (Scalar::q() - Scalar(1)) / (Scalar(1) - Scalar::q().pow(-r));
}

inline Tableau swap_letters(Tableau t, int a, int b) {
  for (auto& row : t.rows)
    for (auto& x : row) {
      if (x == a)
        x = b;
      else if (x == b)
        x = a;
    }
  return t;
}

}  // namespace detail

// Seminormal form on standard tableaux. For t and s_i:
//   same row     -> T v_t = q v_t
//   same column  -> T v_t = -v_t
//   otherwise    -> T v_t = a_t v_t + b_t v_{s_i t}, where b_t = 1 if i+1 lies
//                   below i in t and b_t = a_t a_{s_i t} + q otherwise.
// The relations are verified by the ModulePresentation constructor.
inline SpechtModule specht_module(const Partition& lambda, int bound = kDefaultSpechtBound) {
  if (lambda.size() > bound) throw Error("size bound", "Specht module of size " + std::to_string(lambda.size()));
  SpechtModule sm{lambda, syt_enumerate(lambda, bound), {}};
  const int n = lambda.size();
  std::map<Tableau, Index> index;
  for (std::size_t k = 0; k < sm.basis.size(); ++k) index.emplace(sm.basis[k], static_cast<Index>(k));
  const Scalar q = Scalar::q();
  std::vector<ExactMatrix> gens;
  for (int i = 1; i < n; ++i) {
    std::vector<SVec> cols(sm.basis.size());
    for (std::size_t k = 0; k < sm.basis.size(); ++k) {
      const Tableau& t = sm.basis[k];
      const auto [ri, ci] = t.position(i);
      const auto [rj, cj] = t.position(i + 1);
      const Index self = static_cast<Index>(k);
      if (ri == rj) {
        cols[k] = SVec{{self, q}};
      } else if (ci == cj) {
        cols[k] = SVec{{self, Scalar(-1)}};
      } else {
        const int r = t.content(i + 1) - t.content(i);
        const Scalar a = detail::seminormal_diagonal(r);
        const Index other = index.at(detail::swap_letters(t, i, i + 1));
        const Scalar b = rj > ri ? Scalar(1) : a * detail::seminormal_diagonal(-r) + q;
        cols[k] = accumulate({{self, a}, {other, b}});
      }
    }
    gens.push_back(ExactMatrix::from_columns(sm.basis.size(), std::move(cols)));
  }
  sm.presentation = ModulePresentation(static_cast<std::size_t>(n), sm.basis.size(), std::move(gens),
                                       "S^(" + lambda.to_string() + ")");
  return sm;
}

// Trace of T_w on V.
inline Scalar character(const ModulePresentation& v, const Permutation& w) {
  if (w.rank() != v.rank() && !(v.rank() <= 1 && w.rank() <= 1)) throw Error("rank mismatch");
  const auto word = w.reduced_word();
  Scalar tr;
  for (std::size_t j = 0; j < v.dim(); ++j) tr += entry(v.act_word(word, unit_vector(static_cast<Index>(j))), static_cast<Index>(j));
  return tr;
}

struct CharacterTable {
  int n = 0;
  std::vector<Partition> irreducibles;             // rows
  std::vector<Partition> classes;                  // columns (cycle types)
  std::vector<Permutation> class_reps;             // minimal length representatives
  std::vector<std::vector<Scalar>> values;         // values[row][col]
};

namespace detail {

// Solves A x = b exactly for square invertible A (row-major); throws on singular A.
inline std::vector<Scalar> solve_square(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) throw Error("singular system");
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    const Scalar inv = a[c][c].inverse();
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Scalar f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

inline CharacterTable build_character_table(int n) {
  CharacterTable t;
  t.n = n;
  t.irreducibles = partitions_of(n);
  for (const auto& [mu, w] : conjugacy_min_reps(n)) {
    t.classes.push_back(mu);
    t.class_reps.push_back(w);
  }
  for (const auto& lambda : t.irreducibles) {
    const auto sm = specht_module(lambda, std::max(n, kDefaultSpechtBound));
    std::vector<Scalar> row;
    for (const auto& w : t.class_reps) row.push_back(character(sm.presentation, w));
    t.values.push_back(std::move(row));
  }
  // Invertibility over Q(q).
  std::vector<SVec> cols;
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    SVec col;
    for (std::size_t r = 0; r < t.irreducibles.size(); ++r)
      if (!t.values[r][c].is_zero()) col.emplace_back(static_cast<Index>(r), t.values[r][c]);
    cols.push_back(std::move(col));
  }
  if (exact_rank(ExactMatrix::from_columns(t.irreducibles.size(), std::move(cols))) != t.irreducibles.size())
    throw Error("degenerate character table");
  return t;
}

}  // namespace detail

// Values chi_lambda(T_{w_mu}) at minimal length class representatives, memoized per rank.
inline const CharacterTable& character_table(int n, int bound = kDefaultSpechtBound) {
  if (n < 1) throw Error("range", "character table rank");
  if (n > bound) throw Error("size bound", "character table of rank " + std::to_string(n));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<CharacterTable>(detail::build_character_table(n));
  return *slot;
}

// Multiplicities of the irreducibles in V, from characters at class representatives.
inline std::map<Partition, int> decompose(const ModulePresentation& v, int bound = kDefaultSpechtBound) {
  std::map<Partition, int> out;
  if (v.dim() == 0) return out;
  const int n = static_cast<int>(v.rank());
  if (n <= 1) {
    out[n == 0 ? Partition() : Partition({1})] = static_cast<int>(v.dim());
    return out;
  }
  const CharacterTable& table = character_table(n, bound);
  const std::size_t p = table.irreducibles.size();
  std::vector<std::vector<Scalar>> a(p, std::vector<Scalar>(p));
  std::vector<Scalar> b(p);
  for (std::size_t c = 0; c < p; ++c) {
    for (std::size_t r = 0; r < p; ++r) a[c][r] = table.values[r][c];
    b[c] = character(v, table.class_reps[c]);
  }
  const auto m = detail::solve_square(std::move(a), std::move(b));
  mpz_class total = 0;
  for (std::size_t r = 0; r < p; ++r) {
    if (!m[r].is_rational()) throw Error("not a module", "non-constant multiplicity " + m[r].to_string());
    const mpq_class x = m[r].as_rational();
    if (x.get_den() != 1 || sgn(x) < 0) throw Error("not a module", "multiplicity " + x.get_str());
    if (sgn(x) > 0) out[table.irreducibles[r]] = static_cast<int>(x.get_num().get_si());
    total += x.get_num() * syt_count(table.irreducibles[r]);
  }
  if (total != v.dim()) throw Error("not a module", "multiplicities do not account for the dimension");
  return out;
}

// Which element spans the relation subspace Q: (T_s - q)v or the literal (T_s - 1)v.
enum class CoinvariantMode { q_twisted, literal };

struct CoinvariantQuotient {
  Quotient quotient;           // of the ambient space of V
  ModulePresentation module;   // induced action of H_a (generators 1..a-1)
};

// Spanning set of Q for the tail generators first..last (inclusive).
inline std::vector<SVec> tail_relations(const ModulePresentation& v, int first, int last,
                                        CoinvariantMode mode = CoinvariantMode::q_twisted) {
  const Scalar eig = mode == CoinvariantMode::q_twisted ? Scalar::q() : Scalar(1);
  std::vector<SVec> span;
  for (int i = first; i <= last; ++i) {
    const ExactMatrix& g = v.generator(i);
    for (std::size_t j = 0; j < v.dim(); ++j) {
      SVec col = combine(1, g.column(j), -eig, unit_vector(static_cast<Index>(j)));
      if (!col.empty()) span.push_back(std::move(col));
    }
  }
  return span;
}

// V (over H_{a+n}) modulo the span of (T_{s_i} - q)v for the tail generators
// i = a+1..a+n-1, with the induced action of H_a.
inline CoinvariantQuotient coinvariants(const ModulePresentation& v, int a,
                                        CoinvariantMode mode = CoinvariantMode::q_twisted) {
  const int total = static_cast<int>(v.rank());
  if (a < 0 || a > total) throw Error("range", "coinvariant split");
  Quotient quot = make_quotient(v.dim(), tail_relations(v, a + 1, total - 1, mode));
  std::vector<ExactMatrix> gens;
  for (int i = 1; i < a; ++i) gens.push_back(quot.induced(v.generator(i), quot));
  ModulePresentation mod(static_cast<std::size_t>(a), quot.dim(), std::move(gens), "Coinv(" + v.label() + ")");
  return {std::move(quot), std::move(mod)};
}

struct BranchingReport {
  Partition lambda;
  int m = 0;
  std::map<Partition, int> expected;
  std::map<Partition, int> observed;
  bool match() const { return expected == observed; }
};

// Res to H_{n-m} (x) H_m of S^lambda, then coinvariants for the H_m factor,
// against {mu : lambda in pieri_add(mu, m)}.
inline BranchingReport branching_check(const Partition& lambda, int m, int bound = kDefaultSpechtBound) {
  const int n = lambda.size();
  if (m < 0 || m > n) throw Error("range", "branching split");
  BranchingReport rep{lambda, m, {}, {}};
  for (const auto& mu : partitions_of(n - m)) {
    const auto up = pieri_add(mu, m);
    if (std::find(up.begin(), up.end(), lambda) != up.end()) rep.expected[mu] = 1;
  }
  const auto sm = specht_module(lambda, bound);
  rep.observed = decompose(coinvariants(sm.presentation, n - m).module, bound);
  return rep;
}

}  // namespace hecke_stab
