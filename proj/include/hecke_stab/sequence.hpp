#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hecke_stab/cosets.hpp"
#include "hecke_stab/error.hpp"
#include "hecke_stab/linalg.hpp"
#include "hecke_stab/module.hpp"
#include "hecke_stab/partitions.hpp"
#include "hecke_stab/specht.hpp"

namespace hecke_stab {

// (V_n, phi_n) for 0 <= n <= n_max, phi_n : V_n -> V_{n+1}.
struct ConsistentSequence {
  std::string label;
  int n_max = 0;
  std::vector<ModulePresentation> modules;
  std::vector<ExactMatrix> connectors;

  const ModulePresentation& at(int n) const { return modules.at(static_cast<std::size_t>(n)); }
  std::size_t dim(int n) const { return at(n).dim(); }
  const ExactMatrix& connector(int n) const { return connectors.at(static_cast<std::size_t>(n)); }

  // phi_{to-1} ... phi_from applied to v in V_from.
  SVec push(int from, int to, SVec v) const {
    for (int k = from; k < to && !v.empty(); ++k) v = connector(k).apply(v);
    return v;
  }
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& m : modules) d.push_back(m.dim());
    return d;
  }
};

inline ConsistentSequence zero_sequence(int n_max, std::string label = "0") {
  ConsistentSequence s{std::move(label), n_max, {}, {}};
  for (int n = 0; n <= n_max; ++n) s.modules.push_back(ModulePresentation::zero(static_cast<std::size_t>(n)));
  for (int n = 0; n < n_max; ++n) s.connectors.emplace_back(0, 0);
  return s;
}

struct ConsistencyReport {
  // (n, i): phi_n fails to intertwine T_{s_i}; i = 0 marks a shape or rank fault.
  std::vector<std::pair<int, int>> violations;
  bool ok() const { return violations.empty(); }
};

inline ConsistencyReport check_consistency(const ConsistentSequence& v) {
  ConsistencyReport rep;
  if (v.modules.size() != static_cast<std::size_t>(v.n_max + 1) || v.connectors.size() != static_cast<std::size_t>(v.n_max)) {
    rep.violations.emplace_back(-1, 0);
    return rep;
  }
  for (int n = 0; n <= v.n_max; ++n)
    if (v.at(n).rank() != static_cast<std::size_t>(n)) rep.violations.emplace_back(n, 0);
  for (int n = 0; n < v.n_max; ++n) {
    const ExactMatrix& phi = v.connector(n);
    if (phi.rows() != v.dim(n + 1) || phi.cols() != v.dim(n)) {
      rep.violations.emplace_back(n, 0);
      continue;
    }
    for (int i = 1; i < n; ++i)
      if (phi * v.at(n).generator(i) != v.at(n + 1).generator(i) * phi) rep.violations.emplace_back(n, i);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// M(W)

namespace detail {

struct MBlock {
  int m = 0;
  std::size_t offset = 0;
  InducedModule ind;
};

inline std::vector<MBlock> m_blocks(const std::map<int, ModulePresentation>& w, int n) {
  std::vector<MBlock> blocks;
  std::size_t offset = 0;
  for (const auto& [m, wm] : w) {
    if (m > n || wm.dim() == 0) continue;
    MBlock b{m, offset, induce(wm, one_dim_rep(n - m, OneDimKind::index))};
    offset += b.ind.module.dim();
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace detail

// M(W)_n = sum over m <= n of H_n (x)_{H_(m,n-m)} (W_m [x] index), with
// T_d (x) w -> T_d (x) w along S_n in S_{n+1}.
inline ConsistentSequence build_M(const std::map<int, ModulePresentation>& w, int n_max, std::string label = "M(W)") {
  for (const auto& [m, wm] : w)
    if (m < 0 || wm.rank() != static_cast<std::size_t>(m)) throw Error("rank mismatch", "W_" + std::to_string(m));
  ConsistentSequence s{std::move(label), n_max, {}, {}};
  std::vector<std::vector<detail::MBlock>> blocks;
  for (int n = 0; n <= n_max; ++n) {
    blocks.push_back(detail::m_blocks(w, n));
    std::vector<const ModulePresentation*> parts;
    for (const auto& b : blocks.back()) parts.push_back(&b.ind.module);
    s.modules.push_back(direct_sum(parts, static_cast<std::size_t>(n), s.label + "_" + std::to_string(n)));
  }
  for (int n = 0; n < n_max; ++n) {
    std::vector<SVec> cols(s.dim(n));
    const auto& next = blocks[n + 1];
    for (const auto& b : blocks[n]) {
      const auto it = std::find_if(next.begin(), next.end(), [&](const auto& nb) { return nb.m == b.m; });
      for (std::size_t r = 0; r < b.ind.reps.size(); ++r) {
        const std::size_t r2 = it->ind.rep_index.at(b.ind.reps[r].embed(static_cast<std::size_t>(n + 1)));
        for (std::size_t x = 0; x < b.ind.inner_dim; ++x)
          cols[b.offset + b.ind.index(r, x)] = unit_vector(static_cast<Index>(it->offset + it->ind.index(r2, x)));
      }
    }
    s.connectors.push_back(ExactMatrix::from_columns(s.dim(n + 1), std::move(cols)));
  }
  return s;
}

inline ConsistentSequence build_Mm(int m, int n_max) {
  return build_M({{m, regular_representation(m)}}, n_max, "M(" + std::to_string(m) + ")");
}

inline ConsistentSequence build_M_specht(const Partition& lambda, int n_max) {
  if (lambda.size() > n_max) throw Error("range", "|lambda| exceeds n_max");
  return build_M({{lambda.size(), specht_module(lambda).presentation}}, n_max, "M(S^(" + lambda.to_string() + "))");
}

// ---------------------------------------------------------------------------
// Subsequences

namespace detail {

// Adds the H-closure of `pending` to e.
inline void close_under(const ModulePresentation& v, SemiEchelon& e, std::vector<SVec> pending) {
  while (!pending.empty()) {
    SVec x = std::move(pending.back());
    pending.pop_back();
    if (x.empty() || !e.insert(x)) continue;
    for (const auto& g : v.generators()) pending.push_back(g.apply(x));
  }
}

inline std::vector<SVec> echelon_basis(const SemiEchelon& e) {
  std::vector<SVec> b;
  for (std::size_t k = 0; k < e.rank(); ++k) b.push_back(e.row_vector(k));
  return b;
}

inline ExactMatrix in_coordinates(const ExactMatrix& map, const std::vector<SVec>& basis, const SemiEchelon& target) {
  std::vector<SVec> cols;
  for (const auto& b : basis) {
    std::vector<Scalar> c;
    try {
      c = target.coordinates(map.apply(b));
    } catch (const Error&) {
      throw Error("not invariant");
    }
    SVec col;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) col.emplace_back(static_cast<Index>(k), c[k]);
    cols.push_back(std::move(col));
  }
  return ExactMatrix::from_columns(target.rank(), std::move(cols));
}

}  // namespace detail

// Sub-object of V spanned degreewise; basis[n] holds ambient vectors of V_n.
struct SubSequence {
  ConsistentSequence seq;
  std::vector<std::vector<SVec>> basis;
};

// Presentation of an invariant, connector-stable family of subspaces, in the
// echelon bases; throws "not invariant" otherwise.
inline SubSequence materialize(const ConsistentSequence& v, const std::vector<SemiEchelon>& spaces, std::string label) {
  SubSequence out{{std::move(label), v.n_max, {}, {}}, {}};
  for (int n = 0; n <= v.n_max; ++n) {
    out.basis.push_back(detail::echelon_basis(spaces[n]));
    std::vector<ExactMatrix> gens;
    for (const auto& g : v.at(n).generators()) gens.push_back(detail::in_coordinates(g, out.basis[n], spaces[n]));
    out.seq.modules.emplace_back(static_cast<std::size_t>(n), spaces[n].rank(), std::move(gens), out.seq.label);
  }
  for (int n = 0; n < v.n_max; ++n)
    out.seq.connectors.push_back(detail::in_coordinates(v.connector(n), out.basis[n], spaces[n + 1]));
  return out;
}

// Subsequence on a set of coordinate vectors per degree.
inline SubSequence coordinate_subsequence(const ConsistentSequence& v, const std::vector<std::vector<Index>>& coords,
                                          std::string label) {
  std::vector<SemiEchelon> spaces;
  for (int n = 0; n <= v.n_max; ++n) {
    SemiEchelon e(v.dim(n));
    for (Index c : coords[n]) e.insert(unit_vector(c));
    spaces.push_back(std::move(e));
  }
  return materialize(v, spaces, std::move(label));
}

namespace detail {

// T_d . x over the minimal representatives d of S_n / S_{n-1}; spans H_n . X
// whenever span(xs) is H_{n-1}-stable.
inline std::vector<SVec> coset_translates(const ModulePresentation& v, const std::vector<SVec>& xs) {
  const int n = static_cast<int>(v.rank());
  std::vector<SVec> out(xs.begin(), xs.end());
  if (n < 2) return out;
  for (const auto& d : coset_min_reps(n, Composition({n - 1, 1}))) {
    if (d.is_identity()) continue;
    const auto word = d.reduced_word();
    for (const auto& x : xs) out.push_back(v.act_word(word, x));
  }
  return out;
}

}  // namespace detail

// dim of H_n . phi_{n-1}(V_{n-1}) inside V_n.
inline std::size_t generated_dim(const ConsistentSequence& v, int n) {
  if (n == 0) return 0;
  SemiEchelon e(v.dim(n));
  const auto& phi = v.connector(n - 1);
  for (const auto& x : detail::coset_translates(v.at(n), phi.columns())) e.insert(x);
  return e.rank();
}

// Least d with V_n = H_n . phi_{n-1}(V_{n-1}) for all d < n <= n_max.
inline int generation_degree(const ConsistentSequence& v) {
  int d = 0;
  for (int n = v.n_max; n >= 1; --n)
    if (generated_dim(v, n) != v.dim(n)) {
      d = n;
      break;
    }
  return d;
}

struct Seed {
  int degree = 0;
  SVec vector;
};

struct SpanResult {
  SubSequence sub;
  int generation_degree = 0;
};

// Degreewise H-closure of the seeds together with pushed-forward lower degrees.
inline SpanResult span(const ConsistentSequence& v, const std::vector<Seed>& seeds, std::string label = "span") {
  std::vector<SemiEchelon> spaces;
  for (int n = 0; n <= v.n_max; ++n) {
    SemiEchelon e(v.dim(n));
    std::vector<SVec> pushed;
    if (n > 0)
      for (std::size_t k = 0; k < spaces[n - 1].rank(); ++k)
        pushed.push_back(v.connector(n - 1).apply(spaces[n - 1].row_vector(k)));
    for (const auto& x : detail::coset_translates(v.at(n), pushed)) e.insert(x);
    std::vector<SVec> pending;
    for (const auto& s : seeds) {
      if (s.degree < 0 || s.degree > v.n_max) throw Error("range", "seed degree");
      if (s.degree == n) pending.push_back(s.vector);
    }
    detail::close_under(v.at(n), e, std::move(pending));
    spaces.push_back(std::move(e));
  }
  SpanResult out{materialize(v, spaces, std::move(label)), 0};
  out.generation_degree = generation_degree(out.sub.seq);
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms and pointwise constructions

struct SequenceMorphism {
  ConsistentSequence source;
  ConsistentSequence target;
  std::vector<ExactMatrix> components;
};

// (n, i) failures: i >= 1 for the H_n-action, i = 0 for the connector square,
// i = -1 for shape.
inline std::vector<std::pair<int, int>> check_morphism(const SequenceMorphism& f) {
  std::vector<std::pair<int, int>> bad;
  if (f.source.n_max != f.target.n_max || f.components.size() != static_cast<std::size_t>(f.source.n_max + 1)) {
    bad.emplace_back(-1, -1);
    return bad;
  }
  for (int n = 0; n <= f.source.n_max; ++n) {
    const ExactMatrix& c = f.components[n];
    if (c.rows() != f.target.dim(n) || c.cols() != f.source.dim(n)) {
      bad.emplace_back(n, -1);
      continue;
    }
    for (int i = 1; i < n; ++i)
      if (c * f.source.at(n).generator(i) != f.target.at(n).generator(i) * c) bad.emplace_back(n, i);
    if (n < f.source.n_max && f.components[n + 1] * f.source.connector(n) != f.target.connector(n) * c)
      bad.emplace_back(n, 0);
  }
  return bad;
}

inline ConsistentSequence direct_sum(const std::vector<const ConsistentSequence*>& parts, std::string label = "sum") {
  if (parts.empty()) throw Error("shape", "empty direct sum");
  const int n_max = parts.front()->n_max;
  for (const auto* p : parts)
    if (p->n_max != n_max) throw Error("shape", "truncations differ");
  ConsistentSequence s{std::move(label), n_max, {}, {}};
  for (int n = 0; n <= n_max; ++n) {
    std::vector<const ModulePresentation*> mods;
    for (const auto* p : parts) mods.push_back(&p->at(n));
    s.modules.push_back(direct_sum(mods, static_cast<std::size_t>(n), s.label));
  }
  for (int n = 0; n < n_max; ++n) {
    std::vector<const ExactMatrix*> blocks;
    for (const auto* p : parts) blocks.push_back(&p->connector(n));
    s.connectors.push_back(ExactMatrix::block_diagonal(blocks));
  }
  return s;
}

// Lifts v_i in V_i to the free generator 1 (x) v_i of M(V_i): the component in
// degree n sends T_d (x) v to T_d . phi_{n-1,i}(v). Requires V generated in
// degree <= d, and a morphism only when the tail acts on phi-images by q.
inline SequenceMorphism free_cover(const ConsistentSequence& v, int d) {
  if (d < 0 || d > v.n_max) throw Error("range", "cover degree");
  if (generation_degree(v) > d) throw Error("insufficient degree", "generation degree exceeds " + std::to_string(d));
  std::vector<ConsistentSequence> summands;
  for (int i = 0; i <= d; ++i) summands.push_back(build_M({{i, v.at(i)}}, v.n_max, "M(V_" + std::to_string(i) + ")"));
  std::vector<const ConsistentSequence*> ptrs;
  for (const auto& s : summands) ptrs.push_back(&s);
  SequenceMorphism f{direct_sum(ptrs, "cover"), v, {}};
  for (int n = 0; n <= v.n_max; ++n) {
    std::vector<SVec> cols;
    for (int i = 0; i <= d; ++i) {
      if (i > n || v.dim(i) == 0) continue;
      const auto reps = coset_min_reps(n, Composition({i, n - i}));
      for (const auto& rep : reps) {
        const auto word = rep.reduced_word();
        for (std::size_t x = 0; x < v.dim(i); ++x)
          cols.push_back(v.at(n).act_word(word, v.push(i, n, unit_vector(static_cast<Index>(x)))));
      }
    }
    f.components.push_back(ExactMatrix::from_columns(v.dim(n), std::move(cols)));
  }
  const auto bad = check_morphism(f);
  if (!bad.empty())
    throw Error("not a morphism", "cover fails at n=" + std::to_string(bad.front().first) + " i=" +
                                      std::to_string(bad.front().second));
  for (int n = 0; n <= v.n_max; ++n)
    if (exact_rank(f.components[n]) != v.dim(n)) throw Error("internal", "cover not surjective");
  return f;
}

inline SequenceMorphism identity_morphism(const ConsistentSequence& v) {
  SequenceMorphism f{v, v, {}};
  for (int n = 0; n <= v.n_max; ++n) f.components.push_back(ExactMatrix::identity(v.dim(n)));
  return f;
}

inline SubSequence kernel(const SequenceMorphism& f) {
  if (!check_morphism(f).empty()) throw Error("not a morphism");
  std::vector<SemiEchelon> spaces;
  for (int n = 0; n <= f.source.n_max; ++n) {
    SemiEchelon e(f.source.dim(n));
    for (const auto& k : kernel_basis(f.components[n])) e.insert(k);
    spaces.push_back(std::move(e));
  }
  return materialize(f.source, spaces, "ker");
}

inline ConsistentSequence cokernel(const SequenceMorphism& f) {
  if (!check_morphism(f).empty()) throw Error("not a morphism");
  const ConsistentSequence& w = f.target;
  std::vector<Quotient> quots;
  for (int n = 0; n <= w.n_max; ++n) quots.push_back(make_quotient(w.dim(n), f.components[n].columns()));
  ConsistentSequence s{"coker", w.n_max, {}, {}};
  for (int n = 0; n <= w.n_max; ++n) {
    std::vector<ExactMatrix> gens;
    for (const auto& g : w.at(n).generators()) gens.push_back(quots[n].induced(g, quots[n]));
    s.modules.emplace_back(static_cast<std::size_t>(n), quots[n].dim(), std::move(gens), "coker");
  }
  for (int n = 0; n < w.n_max; ++n) s.connectors.push_back(quots[n].induced(w.connector(n), quots[n + 1]));
  return s;
}

// V_n (x)_k W_n with H_n acting on each factor separately; both actions share
// the connectors phi_n (x) psi_n.
struct TensorSequence {
  ConsistentSequence left;   // T (x) 1
  ConsistentSequence right;  // 1 (x) T
};

inline TensorSequence tensor(const ConsistentSequence& v, const ConsistentSequence& w) {
  if (v.n_max != w.n_max) throw Error("shape", "truncations differ");
  TensorSequence t{{v.label + "(x)" + w.label, v.n_max, {}, {}}, {v.label + "(x)" + w.label, v.n_max, {}, {}}};
  for (int n = 0; n <= v.n_max; ++n) {
    const ExactMatrix iv = ExactMatrix::identity(v.dim(n));
    const ExactMatrix iw = ExactMatrix::identity(w.dim(n));
    std::vector<ExactMatrix> lg, rg;
    for (int i = 1; i < n; ++i) {
      lg.push_back(kron(v.at(n).generator(i), iw));
      rg.push_back(kron(iv, w.at(n).generator(i)));
    }
    for (std::size_t i = 0; i < lg.size(); ++i)
      for (std::size_t j = 0; j < rg.size(); ++j)
        if (lg[i] * rg[j] != rg[j] * lg[i]) throw Error("internal", "factor actions do not commute");
    const std::size_t dim = v.dim(n) * w.dim(n);
    t.left.modules.emplace_back(static_cast<std::size_t>(n), dim, std::move(lg), t.left.label);
    t.right.modules.emplace_back(static_cast<std::size_t>(n), dim, std::move(rg), t.right.label);
  }
  for (int n = 0; n < v.n_max; ++n) {
    t.left.connectors.push_back(kron(v.connector(n), w.connector(n)));
    t.right.connectors.push_back(t.left.connectors.back());
  }
  return t;
}

// ---------------------------------------------------------------------------
// Coinvariant sequences and degrees

struct CoinvariantSequence {
  int a = 0;
  std::vector<CoinvariantQuotient> quotients;  // index n, a + n <= n_max
  std::vector<ExactMatrix> maps;               // T : Phi_a(V)_n -> Phi_a(V)_{n+1}
  bool well_defined = true;                    // phi(Q_n) lies in Q_{n+1}
};

inline CoinvariantSequence phi_a(const ConsistentSequence& v, int a, CoinvariantMode mode = CoinvariantMode::q_twisted) {
  if (a < 0 || a > v.n_max) throw Error("range", "a");
  CoinvariantSequence out;
  out.a = a;
  for (int n = 0; a + n <= v.n_max; ++n) out.quotients.push_back(coinvariants(v.at(a + n), a, mode));
  for (std::size_t n = 0; n + 1 < out.quotients.size(); ++n) {
    const auto& src = out.quotients[n].quotient;
    const auto& dst = out.quotients[n + 1].quotient;
    const ExactMatrix& phi = v.connector(a + static_cast<int>(n));
    for (std::size_t k = 0; k < src.sub.rank() && out.well_defined; ++k)
      if (!dst.project(phi.apply(src.sub.row_vector(k))).empty()) out.well_defined = false;
    out.maps.push_back(src.induced(phi, dst));
  }
  return out;
}

struct DegreeProbe {
  int a = 0;
  int n = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool injective() const { return rank == source_dim; }
  bool surjective() const { return rank == target_dim; }
};

// Observed degrees over the probed window only.
struct DegreeReport {
  int a_max = 0;
  int n_max = 0;
  std::vector<DegreeProbe> probes;
  int injective_degree = 0;
  int surjective_degree = 0;
  int stability_degree = 0;
  bool well_defined = true;
  // (a, n) where a property failed after holding at a smaller n for the same a.
  std::vector<std::pair<int, int>> monotonicity_violations;
};

inline DegreeReport degrees(const ConsistentSequence& v, int a_max, const RankMode& mode = RankMode::exact(),
                            CoinvariantMode cmode = CoinvariantMode::q_twisted) {
  if (a_max < 0 || a_max > v.n_max) throw Error("range", "a_max");
  DegreeReport rep;
  rep.a_max = a_max;
  rep.n_max = v.n_max;
  for (int a = 0; a <= a_max; ++a) {
    const auto cs = phi_a(v, a, cmode);
    rep.well_defined = rep.well_defined && cs.well_defined;
    bool inj_seen = false, sur_seen = false;
    for (std::size_t n = 0; n < cs.maps.size(); ++n) {
      DegreeProbe p{a, static_cast<int>(n), cs.quotients[n].quotient.dim(), cs.quotients[n + 1].quotient.dim(), 0};
      p.rank = rank(cs.maps[n], mode);
      if ((inj_seen && !p.injective()) || (sur_seen && !p.surjective())) rep.monotonicity_violations.emplace_back(a, p.n);
      inj_seen = inj_seen || p.injective();
      sur_seen = sur_seen || p.surjective();
      if (!p.injective()) rep.injective_degree = std::max(rep.injective_degree, p.n + 1);
      if (!p.surjective()) rep.surjective_degree = std::max(rep.surjective_degree, p.n + 1);
      rep.probes.push_back(p);
    }
  }
  rep.stability_degree = std::max(rep.injective_degree, rep.surjective_degree);
  return rep;
}

// ---------------------------------------------------------------------------
// Multiplicities, weight, stability

// Rows keyed by the unpadded label of each constituent S^mu of V_n.
struct MultiplicityTable {
  int n_max = 0;
  std::map<Partition, std::vector<int>> rows;
  // Constituents mu whose tail is not a valid pad at n (kept literal).
  std::map<Partition, int> invalid_pad;

  int at(const Partition& lambda, int n) const {
    auto it = rows.find(lambda);
    return it == rows.end() ? 0 : it->second[n];
  }
  std::map<Partition, int> column(int n) const {
    std::map<Partition, int> c;
    for (const auto& [l, r] : rows)
      if (r[n] != 0) c[l] = r[n];
    return c;
  }
};

inline MultiplicityTable multiplicity_table(const ConsistentSequence& v) {
  MultiplicityTable t;
  t.n_max = v.n_max;
  for (int n = 0; n <= v.n_max; ++n) {
    for (const auto& [mu, c] : decompose(v.at(n))) {
      const Partition lambda = unpad(mu);
      if (n < lambda.size() + lambda.first()) {
        t.invalid_pad[mu] += c;
        continue;
      }
      auto& row = t.rows[lambda];
      if (row.empty()) row.assign(static_cast<std::size_t>(v.n_max + 1), 0);
      row[n] = c;
    }
  }
  return t;
}

inline int weight(const ConsistentSequence& v) {
  int w = 0;
  for (int n = 0; n <= v.n_max; ++n)
    for (const auto& [mu, c] : decompose(v.at(n))) w = std::max(w, n - mu.first());
  return w;
}

struct StabilityVerdict {
  bool stable = false;
  int onset = 0;  // least N with all three clauses for N <= n < n_max
  int n_max = 0;
  std::vector<bool> injective;     // phi_n, n < n_max
  std::vector<bool> generated;     // V_{n+1} = H_{n+1} . phi_n(V_n)
  std::vector<bool> multiplicity;  // c_{., n} = c_{., n+1}
  int stability_degree = 0;
  int weight = 0;
  int predicted_bound = 0;  // stability_degree + weight
  bool within_bound = false;
};

inline StabilityVerdict is_uniformly_stable(const ConsistentSequence& v, int a_max = 2,
                                            const RankMode& mode = RankMode::exact()) {
  StabilityVerdict out;
  out.n_max = v.n_max;
  const MultiplicityTable table = multiplicity_table(v);
  for (int n = 0; n < v.n_max; ++n) {
    out.injective.push_back(rank(v.connector(n), mode) == v.dim(n));
    out.generated.push_back(generated_dim(v, n + 1) == v.dim(n + 1));
    out.multiplicity.push_back(table.column(n) == table.column(n + 1));
  }
  out.onset = v.n_max;
  for (int n = v.n_max - 1; n >= 0; --n) {
    if (!(out.injective[n] && out.generated[n] && out.multiplicity[n])) break;
    out.onset = n;
  }
  out.stable = out.onset <= v.n_max - 1;
  out.stability_degree = degrees(v, std::min(a_max, v.n_max), mode).stability_degree;
  out.weight = weight(v);
  out.predicted_bound = out.stability_degree + out.weight;
  out.within_bound = out.onset <= out.predicted_bound;
  return out;
}

// ---------------------------------------------------------------------------
// Shift functor

// (S_{+a} V)_n = V_{a+n} with H_n acting through the last n letters
// (generators a+1..a+n-1); connectors are reused.
inline ConsistentSequence shift(const ConsistentSequence& v, int a) {
  if (a < 0 || a > v.n_max) throw Error("range", "shift");
  if (a == 0) return v;
  ConsistentSequence s{"S+" + std::to_string(a) + v.label, v.n_max - a, {}, {}};
  for (int n = 0; n <= s.n_max; ++n) {
    const auto& big = v.at(a + n);
    std::vector<ExactMatrix> gens;
    for (int i = 1; i < n; ++i) gens.push_back(big.generator(a + i));
    s.modules.emplace_back(static_cast<std::size_t>(n), big.dim(), std::move(gens), s.label);
  }
  for (int n = 0; n < s.n_max; ++n) s.connectors.push_back(v.connector(a + n));
  return s;
}

struct ShiftDecomposition {
  int m = 0;
  int a = 0;
  int n_max = 0;  // of the shifted sequence
  std::vector<std::size_t> shifted_dims;
  std::vector<std::size_t> identity_dims;
  std::vector<std::size_t> complement_dims;
  bool direct_sum = false;           // the two blocks partition the basis
  bool identity_iso = false;         // identity block matches M(m) degreewise
  bool complement_consistent = false;
  int complement_generation_degree = 0;
  bool ok() const {
    return direct_sum && identity_iso && complement_consistent && complement_generation_degree <= std::max(0, m - 1);
  }
};

// Splits S_{+a} M(m) by where the first m positions of d land: d([m]) inside
// the last n letters gives a copy of M(m) (d -> d shifted down by a), the rest
// is the complement C_a.
inline ShiftDecomposition shift_decompose_Mm(int m, int a, int n_max) {
  if (m < 1 || a < 0 || a > n_max) throw Error("range", "shift decomposition");
  const ConsistentSequence v = build_Mm(m, n_max);
  const ConsistentSequence s = shift(v, a);
  const ConsistentSequence target = build_Mm(m, s.n_max);
  ShiftDecomposition rep;
  rep.m = m;
  rep.a = a;
  rep.n_max = s.n_max;
  const std::size_t inner = static_cast<std::size_t>(factorial(m).get_ui());
  std::vector<std::vector<Index>> id_coords, rest_coords;
  std::vector<ExactMatrix> iso;
  rep.direct_sum = true;
  for (int n = 0; n <= s.n_max; ++n) {
    const int total = a + n;
    std::vector<Index> id, rest;
    std::vector<SVec> iso_cols;
    if (total >= m) {
      const auto reps = coset_min_reps(total, Composition({m, total - m}));
      std::vector<Permutation> small;
      if (n >= m) small = coset_min_reps(n, Composition({m, n - m}));
      for (std::size_t r = 0; r < reps.size(); ++r) {
        const auto& d = reps[r];
        bool front = false;
        for (int j = 1; j <= m; ++j) front = front || d(j) <= a;
        for (std::size_t x = 0; x < inner; ++x) (front ? rest : id).push_back(static_cast<Index>(r * inner + x));
        if (front) continue;
        std::vector<int> line;
        for (int j = 1; j <= total; ++j)
          if (j <= m || j > m + a) line.push_back(d(j) - a);
        const auto pos = std::find(small.begin(), small.end(), Permutation::from_one_line(line));
        if (pos == small.end()) throw Error("internal", "identity block representative");
        for (std::size_t x = 0; x < inner; ++x)
          iso_cols.push_back(unit_vector(static_cast<Index>(static_cast<std::size_t>(pos - small.begin()) * inner + x)));
      }
    }
    rep.shifted_dims.push_back(s.dim(n));
    rep.identity_dims.push_back(id.size());
    rep.complement_dims.push_back(rest.size());
    if (id.size() + rest.size() != s.dim(n) || id.size() != target.dim(n)) rep.direct_sum = false;
    iso.push_back(ExactMatrix::from_columns(target.dim(n), std::move(iso_cols)));
    id_coords.push_back(std::move(id));
    rest_coords.push_back(std::move(rest));
  }
  const SubSequence id_block = coordinate_subsequence(s, id_coords, "identity block");
  rep.identity_iso = rep.direct_sum && check_morphism({id_block.seq, target, iso}).empty();
  try {
    const SubSequence comp = coordinate_subsequence(s, rest_coords, "C_" + std::to_string(a));
    rep.complement_consistent = check_consistency(comp.seq).ok();
    rep.complement_generation_degree = generation_degree(comp.seq);
  } catch (const Error&) {
    rep.complement_consistent = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Experiments

struct NoetherianTrial {
  std::vector<Seed> seeds;
  std::vector<std::size_t> dims;
  int generation_degree = 0;
  bool finitely_generated = false;  // generated by the seed degrees
  MultiplicityTable table;
  StabilityVerdict verdict;
};

struct NoetherianReport {
  int m = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int n_max = 0;
  std::vector<NoetherianTrial> runs;
  int max_generation_degree = 0;
  bool all_finitely_generated = true;
  bool all_stable = true;
};

// Random seeds (1 to 3 per trial, degrees 0..n_max-2, entries in -3..3) in M(m).
inline NoetherianReport noetherian_experiment(int m, int trials, std::uint64_t seed, int n_max) {
  if (n_max < 2 || trials < 0) throw Error("range", "experiment bounds");
  const ConsistentSequence v = build_Mm(m, n_max);
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };
  NoetherianReport rep{m, trials, seed, n_max, {}, 0, true, true};
  for (int t = 0; t < trials; ++t) {
    NoetherianTrial run;
    const int count = static_cast<int>(draw(1, 3));
    int top = 0;
    for (int k = 0; k < count; ++k) {
      Seed s;
      s.degree = static_cast<int>(draw(0, static_cast<std::uint64_t>(n_max - 2)));
      const std::size_t dim = v.dim(s.degree);
      std::vector<std::pair<Index, Scalar>> terms;
      const int entries = static_cast<int>(draw(1, 3));
      for (int e = 0; e < entries && dim > 0; ++e) {
        const auto c = static_cast<long>(draw(0, 5)) - 3;
        terms.emplace_back(static_cast<Index>(draw(0, dim - 1)), Scalar(c >= 0 ? c + 1 : c));
      }
      s.vector = accumulate(std::move(terms));
      top = std::max(top, s.degree);
      run.seeds.push_back(std::move(s));
    }
    const SpanResult sp = span(v, run.seeds, "W");
    run.dims = sp.sub.seq.dims();
    run.generation_degree = sp.generation_degree;
    run.finitely_generated = sp.generation_degree <= top;
    run.table = multiplicity_table(sp.sub.seq);
    run.verdict = is_uniformly_stable(sp.sub.seq);
    rep.max_generation_degree = std::max(rep.max_generation_degree, run.generation_degree);
    rep.all_finitely_generated = rep.all_finitely_generated && run.finitely_generated;
    rep.all_stable = rep.all_stable && run.verdict.stable;
    rep.runs.push_back(std::move(run));
  }
  return rep;
}

// M(S^(0)) + M(S^(1)) + ... + M(S^(n_max)): a new generator in every degree.
inline ConsistentSequence non_finitely_generated(int n_max) {
  std::map<int, ModulePresentation> w;
  for (int k = 0; k <= n_max; ++k) w.emplace(k, specht_module(Partition(k == 0 ? std::vector<int>{} : std::vector<int>{k}), std::max(k, kDefaultSpechtBound)).presentation);
  return build_M(w, n_max, "sum_k M(S^(k))");
}

}  // namespace hecke_stab
