#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hecke_stab/error.hpp"
#include "hecke_stab/partitions.hpp"
#include "hecke_stab/permutation.hpp"

namespace hecke_stab {

namespace detail {

inline void sort_by_length(std::vector<Permutation>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Permutation& a, const Permutation& b) {
    const int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
  });
}

}  // namespace detail

// Distinguished (minimal length) representatives d of the left cosets d*S_lambda:
// exactly the permutations increasing on every block of lambda. Sorted by length,
// then one-line order; the identity comes first.
inline std::vector<Permutation> coset_min_reps(int n, const Composition& lambda) {
  if (lambda.size() != n) throw Error("composition size");
  std::vector<Permutation> out;
  std::vector<int> one_line(n);
  std::vector<bool> used(n + 1, false);
  const auto blocks = lambda.blocks();
  // Fill positions block by block with increasing values.
  auto rec = [&](auto&& self, std::size_t b, int pos, int min_value) -> void {
    if (b == blocks.size()) {
      out.push_back(Permutation::from_one_line(one_line));
      return;
    }
    if (pos == blocks[b].second) {
      self(self, b + 1, pos, 1);
      return;
    }
    for (int v = min_value; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      one_line[pos] = v;
      self(self, b, pos + 1, v + 1);
      used[v] = false;
    }
  };
  rec(rec, 0, 0, 1);
  detail::sort_by_length(out);
  return out;
}

// Minimal length representatives of the double cosets S_mu \ S_n / S_lambda:
// the d with no right descent in S_lambda and no left descent in S_mu.
inline std::vector<Permutation> double_coset_min_reps(int n, const Composition& mu, const Composition& lambda) {
  if (mu.size() != n || lambda.size() != n) throw Error("composition size");
  std::vector<Permutation> out;
  for (const auto& d : coset_min_reps(n, lambda)) {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      if (mu.contains_generator(i) && !d.left_ascent(i)) ok = false;
    if (ok) out.push_back(d);
  }
  return out;
}

// For cycle type mu (parts in order), the product of consecutive-block cycles
// s_{b+1} s_{b+2} ... s_{b+k-1}; minimal length n - len(mu) in its class.
inline std::map<Partition, Permutation> conjugacy_min_reps(int n) {
  if (n < 1) throw Error("range", "n must be positive");
  std::map<Partition, Permutation> out;
  for (const auto& mu : partitions_of(n)) {
    std::vector<int> word;
    int start = 0;
    for (int k : mu.parts()) {
      for (int i = start + 1; i < start + k; ++i) word.push_back(i);
      start += k;
    }
    out.emplace(mu, Permutation::from_word(n, word));
  }
  return out;
}

// Cycle type of a permutation, as a partition.
inline Partition cycle_type(const Permutation& w) {
  const int n = static_cast<int>(w.rank());
  std::vector<bool> seen(n + 1, false);
  std::vector<int> lengths;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = w(j)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(lengths);
}

// lambda_n = (m, a+n-m) and mu_n = (1^a, n) as compositions of a+n.
inline Composition stabilization_lambda(int a, int m, int n) { return Composition({m, a + n - m}); }
inline Composition stabilization_mu(int a, int n) {
  std::vector<int> parts(a, 1);
  parts.push_back(n);
  return Composition(parts);
}

struct DoubleCosetStep {
  int n = 0;
  std::vector<Permutation> reps;
  std::size_t tableau_count = 0;
  bool contained_in_next = true;  // reps embed into the next step's reps
};

struct DoubleCosetReport {
  int a = 0;
  int m = 0;
  int n_max = 0;
  std::vector<DoubleCosetStep> chain;
  int stable_from = 0;           // least n after which the set no longer changes
  std::size_t stable_size = 0;
  bool inclusions_hold = true;
  bool tableau_bijection = true;  // |reps| == |row-standard tableaux| at every step
  bool stable_by_m = true;        // stable_from <= m
};

// Tracks D_{mu_n, lambda_n} for n = max(0, m-a) .. n_max under S_{a+n} in S_{a+n+1}.
inline DoubleCosetReport double_coset_stabilization(int a, int m, int n_max) {
  if (a < 0 || m < 0) throw Error("range", "a and m must be nonnegative");
  DoubleCosetReport rep{a, m, n_max, {}, 0, 0, true, true, true};
  const int n0 = std::max(0, m - a);
  if (n_max < n0) throw Error("range", "n_max below the first admissible n");
  for (int n = n0; n <= n_max; ++n) {
    DoubleCosetStep step;
    step.n = n;
    const auto lambda = stabilization_lambda(a, m, n);
    const auto mu = stabilization_mu(a, n);
    step.reps = double_coset_min_reps(a + n, mu, lambda);
    step.tableau_count = row_standard_tableaux(lambda, mu).size();
    if (step.tableau_count != step.reps.size()) rep.tableau_bijection = false;
    rep.chain.push_back(std::move(step));
  }
  for (std::size_t k = 0; k + 1 < rep.chain.size(); ++k) {
    const auto& next = rep.chain[k + 1].reps;
    const std::set<Permutation> next_set(next.begin(), next.end());
    for (const auto& d : rep.chain[k].reps)
      if (!next_set.count(d.embed(d.rank() + 1))) rep.chain[k].contained_in_next = false;
    if (!rep.chain[k].contained_in_next) rep.inclusions_hold = false;
  }
  // With inclusions holding, the set stops changing exactly when its size does.
  std::size_t k = rep.chain.size() - 1;
  while (k > 0 && rep.chain[k - 1].reps.size() == rep.chain[k].reps.size() && rep.chain[k - 1].contained_in_next) --k;
  rep.stable_from = rep.chain[k].n;
  rep.stable_size = rep.chain[k].reps.size();
  rep.stable_by_m = rep.stable_from <= m;
  return rep;
}

}  // namespace hecke_stab
