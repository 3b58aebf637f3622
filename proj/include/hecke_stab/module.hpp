#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hecke_stab/cosets.hpp"
#include "hecke_stab/error.hpp"
#include "hecke_stab/hecke.hpp"
#include "hecke_stab/matrix.hpp"
#include "hecke_stab/partitions.hpp"
#include "hecke_stab/permutation.hpp"

namespace hecke_stab {

struct RelationReport {
  std::vector<std::string> failures;  // e.g. "quadratic s_2", "braid s_1 s_2"
  bool ok() const { return failures.empty(); }
};

// Exact check of the defining relations of H_n on generator matrices.
inline RelationReport check_relations(std::size_t dim, const std::vector<ExactMatrix>& gens) {
  RelationReport rep;
  const Scalar q = Scalar::q();
  const ExactMatrix id = ExactMatrix::identity(dim);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const ExactMatrix& g = gens[i];
    if (g.rows() != dim || g.cols() != dim) {
      rep.failures.push_back("shape s_" + std::to_string(i + 1));
      continue;
    }
    if (!((g - id.scaled_by(q)) * (g + id)).is_zero()) rep.failures.push_back("quadratic s_" + std::to_string(i + 1));
  }
  if (!rep.ok()) return rep;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 2; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        rep.failures.push_back("commutation s_" + std::to_string(i + 1) + " s_" + std::to_string(j + 1));
    if (i + 1 < gens.size()) {
      const ExactMatrix& a = gens[i];
      const ExactMatrix& b = gens[i + 1];
      if (a * (b * a) != b * (a * b))
        rep.failures.push_back("braid s_" + std::to_string(i + 1) + " s_" + std::to_string(i + 2));
    }
  }
  return rep;
}

// A finite-dimensional H_n-module given by the action of T_{s_1}, ..., T_{s_{n-1}}.
// The relations are verified on construction.
class ModulePresentation {
 public:
  ModulePresentation() = default;
  ModulePresentation(std::size_t n, std::size_t dim, std::vector<ExactMatrix> gens, std::string label = "")
      : n_(n), dim_(dim), gens_(std::move(gens)), label_(std::move(label)) {
    const std::size_t expected = n == 0 ? 0 : n - 1;
    if (gens_.size() != expected)
      throw Error("not a module", "expected " + std::to_string(expected) + " generator matrices");
    const RelationReport rep = check_relations(dim_, gens_);
    if (!rep.ok()) throw Error("not a module", rep.failures.front());
  }

  static ModulePresentation zero(std::size_t n, std::string label = "0") {
    std::vector<ExactMatrix> gens(n == 0 ? 0 : n - 1, ExactMatrix(0, 0));
    return ModulePresentation(n, 0, std::move(gens), std::move(label));
  }

  std::size_t rank() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }
  // Matrix of T_{s_i}, 1 <= i < n.
  const ExactMatrix& generator(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) >= n_) throw Error("generator range", "s_" + std::to_string(i));
    return gens_[i - 1];
  }
  const std::vector<ExactMatrix>& generators() const { return gens_; }

  // T_{s_{w[0]}} ... T_{s_{w[k]}} applied to v.
  SVec act_word(const std::vector<int>& word, SVec v) const {
    for (auto it = word.rbegin(); it != word.rend() && !v.empty(); ++it) v = generator(*it).apply(v);
    return v;
  }
  SVec act(const Permutation& w, const SVec& v) const { return act_word(w.reduced_word(), v); }

  // Matrix of T_w.
  ExactMatrix basis_action(const Permutation& w) const {
    if (w.rank() != n_ && !(n_ <= 1 && w.rank() <= 1)) throw Error("rank mismatch");
    const auto word = w.reduced_word();
    std::vector<SVec> cols(dim_);
    for (std::size_t j = 0; j < dim_; ++j) cols[j] = act_word(word, unit_vector(static_cast<Index>(j)));
    return ExactMatrix::from_columns(dim_, std::move(cols));
  }

  // Matrix of an arbitrary element.
  ExactMatrix element_action(const HeckeElement& x) const {
    ExactMatrix m(dim_, dim_);
    for (const auto& [w, c] : x.terms()) m = m + basis_action(w).scaled_by(c);
    return m;
  }

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<ExactMatrix> gens_;
  std::string label_;
};

inline ModulePresentation direct_sum(const std::vector<const ModulePresentation*>& parts, std::size_t n,
                                     std::string label = "") {
  std::size_t dim = 0;
  for (const auto* p : parts) {
    if (p->rank() != n) throw Error("rank mismatch");
    dim += p->dim();
  }
  std::vector<ExactMatrix> gens;
  for (int i = 1; static_cast<std::size_t>(i) < n; ++i) {
    std::vector<const ExactMatrix*> blocks;
    for (const auto* p : parts) blocks.push_back(&p->generator(i));
    gens.push_back(ExactMatrix::block_diagonal(blocks));
  }
  return ModulePresentation(n, dim, std::move(gens), std::move(label));
}

inline constexpr int kDefaultRegularBound = 6;

// Left regular module on {T_w}, basis ordered by length then one-line form.
inline ModulePresentation regular_representation(int n, int bound = kDefaultRegularBound) {
  if (n < 0) throw Error("range");
  if (n > bound) throw Error("size bound", "regular representation of H_" + std::to_string(n));
  const std::size_t rank = static_cast<std::size_t>(n);
  auto basis = all_permutations(rank);
  detail::sort_by_length(basis);
  std::unordered_map<Permutation, Index, PermutationHash> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], static_cast<Index>(k));
  const Scalar q = Scalar::q();
  const Scalar q1 = q - Scalar(1);
  std::vector<ExactMatrix> gens;
  for (int i = 1; i < n; ++i) {
    std::vector<SVec> cols(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Permutation& w = basis[k];
      const Index sw = index.at(w.left_mul_simple(i));
      if (w.left_ascent(i))
        cols[k] = unit_vector(sw);
      else
        cols[k] = accumulate({{sw, q}, {static_cast<Index>(k), q1}});
    }
    gens.push_back(ExactMatrix::from_columns(basis.size(), std::move(cols)));
  }
  return ModulePresentation(rank, basis.size(), std::move(gens), "H_" + std::to_string(n));
}

enum class OneDimKind { index, sign };

// Index: every T_{s_i} acts by q. Sign: by -1.
inline ModulePresentation one_dim_rep(int n, OneDimKind kind) {
  const Scalar value = kind == OneDimKind::index ? Scalar::q() : Scalar(-1);
  std::vector<ExactMatrix> gens;
  for (int i = 1; i < n; ++i) gens.push_back(ExactMatrix::scalar_identity(1, value));
  return ModulePresentation(static_cast<std::size_t>(n), 1, std::move(gens),
                            (kind == OneDimKind::index ? "index_" : "sign_") + std::to_string(n));
}

// H_{m+k} (x)_{H_(m,k)} (V [x] W) on the basis T_d (x) (v_i (x) w_j), with d over
// coset_min_reps(m+k, (m,k)). Basis index: d_index * dimV*dimW + i * dimW + j.
struct InducedModule {
  ModulePresentation module;
  int m = 0;
  int k = 0;
  std::size_t inner_dim = 0;
  std::vector<Permutation> reps;
  std::unordered_map<Permutation, std::size_t, PermutationHash> rep_index;

  Index index(std::size_t rep, std::size_t inner) const { return static_cast<Index>(rep * inner_dim + inner); }
};

inline InducedModule induce(const ModulePresentation& v, const ModulePresentation& w) {
  const int m = static_cast<int>(v.rank());
  const int k = static_cast<int>(w.rank());
  const int n = m + k;
  InducedModule out;
  out.m = m;
  out.k = k;
  out.inner_dim = v.dim() * w.dim();
  out.reps = coset_min_reps(n, Composition({m, k}));
  for (std::size_t r = 0; r < out.reps.size(); ++r) out.rep_index.emplace(out.reps[r], r);

  // Action of the parabolic generators on V [x] W.
  std::vector<ExactMatrix> inner(n > 0 ? n - 1 : 0);
  const ExactMatrix id_v = ExactMatrix::identity(v.dim());
  const ExactMatrix id_w = ExactMatrix::identity(w.dim());
  for (int j = 1; j < n; ++j) {
    if (j < m) inner[j - 1] = kron(v.generator(j), id_w);
    if (j > m) inner[j - 1] = kron(id_v, w.generator(j - m));
  }

  const Scalar q = Scalar::q();
  const Scalar q1 = q - Scalar(1);
  const std::size_t dim = out.reps.size() * out.inner_dim;
  std::vector<ExactMatrix> gens;
  for (int i = 1; i < n; ++i) {
    std::vector<SVec> cols(dim);
    for (std::size_t r = 0; r < out.reps.size(); ++r) {
      const Permutation& d = out.reps[r];
      const Permutation sd = d.left_mul_simple(i);
      auto found = out.rep_index.find(sd);
      if (d.left_ascent(i)) {
        if (found != out.rep_index.end()) {
          for (std::size_t x = 0; x < out.inner_dim; ++x) cols[out.index(r, x)] = unit_vector(out.index(found->second, x));
        } else {
          // s d = d s_j with s_j in the parabolic subgroup (Deodhar).
          const int j = d.position_of(i);
          if (d.position_of(i + 1) != j + 1 || j == m) throw Error("internal", "coset action");
          const ExactMatrix& g = inner[j - 1];
          for (std::size_t x = 0; x < out.inner_dim; ++x) {
            SVec col;
            for (const auto& [y, c] : g.column(x)) col.emplace_back(out.index(r, y), c);
            cols[out.index(r, x)] = std::move(col);
          }
        }
      } else {
        if (found == out.rep_index.end()) throw Error("internal", "descent left the coset representatives");
        for (std::size_t x = 0; x < out.inner_dim; ++x)
          cols[out.index(r, x)] = accumulate({{out.index(found->second, x), q}, {out.index(r, x), q1}});
      }
    }
    gens.push_back(ExactMatrix::from_columns(dim, std::move(cols)));
  }
  out.module = ModulePresentation(static_cast<std::size_t>(n), dim, std::move(gens),
                                  "Ind(" + v.label() + "," + w.label() + ")");
  return out;
}

inline ModulePresentation induce_pair(const ModulePresentation& v, const ModulePresentation& w) {
  return induce(v, w).module;
}

// Restriction to H_{n-m} (x) H_m: generators 1..n-m-1 form the first factor,
// n-m+1..n-1 (renumbered from 1) the second; s_{n-m} is dropped.
inline std::pair<ModulePresentation, ModulePresentation> restrict(const ModulePresentation& v, int m) {
  const int n = static_cast<int>(v.rank());
  if (m < 0 || m > n) throw Error("range", "restriction split");
  std::vector<ExactMatrix> first, second;
  for (int i = 1; i < n - m; ++i) first.push_back(v.generator(i));
  for (int i = n - m + 1; i < n; ++i) second.push_back(v.generator(i));
  return {ModulePresentation(static_cast<std::size_t>(n - m), v.dim(), std::move(first), "Res1(" + v.label() + ")"),
          ModulePresentation(static_cast<std::size_t>(m), v.dim(), std::move(second), "Res2(" + v.label() + ")")};
}

}  // namespace hecke_stab
