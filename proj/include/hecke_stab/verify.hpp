#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hecke_stab/cosets.hpp"
#include "hecke_stab/module.hpp"
#include "hecke_stab/partitions.hpp"
#include "hecke_stab/sequence.hpp"
#include "hecke_stab/serialize.hpp"
#include "hecke_stab/specht.hpp"

namespace hecke_stab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyConfig {
  int n_max = 7;       // truncation for the M(S^lambda) families
  int n_max_free = 6;  // truncation for M(m) and the experiments
  int a_max = 2;
  int trials = 20;
  std::uint64_t seed = 42;
};

namespace detail {

inline std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + v[i];
  return s;
}

inline std::string show(const std::map<Partition, int>& m) {
  std::string s = "{";
  bool first = true;
  for (const auto& [l, c] : m) {
    s += (first ? "" : " ") + std::string("(") + l.to_string() + "):" + std::to_string(c);
    first = false;
  }
  return s + "}";
}

inline std::vector<Partition> degree_family() {
  return {Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1}), Partition({3})};
}

// Collects failures; passes iff none.
struct Checker {
  std::vector<std::string> failures;
  std::size_t checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  CriterionResult result(int id, std::string name) const {
    return {id, std::move(name), failures.empty(),
            failures.empty() ? std::to_string(checks) + " exact checks" : join(failures)};
  }
};

}  // namespace detail

inline CriterionResult criterion_relations() {
  detail::Checker c;
  for (int n = 0; n <= 5; ++n) {
    const auto h = regular_representation(n);
    c.expect(check_relations(h.dim(), h.generators()).ok(), "relations H_" + std::to_string(n));
    c.expect(h.dim() == factorial(n), "dim H_" + std::to_string(n));
  }
  return c.result(1, "relation suite");
}

inline CriterionResult criterion_seminormal() {
  detail::Checker c;
  for (int n = 0; n <= 7; ++n)
    for (const auto& l : partitions_of(n)) {
      const std::string tag = "(" + l.to_string() + ")";
      c.expect(syt_enumerate(l).size() == syt_count(l), "hook vs enumeration " + tag);
      if (n > 6) continue;
      const auto sm = specht_module(l);
      c.expect(check_relations(sm.presentation.dim(), sm.presentation.generators()).ok(), "relations " + tag);
      c.expect(sm.presentation.dim() == syt_count(l), "dim " + tag);
    }
  return c.result(2, "seminormal suite");
}

inline CriterionResult criterion_decomposition() {
  detail::Checker c;
  for (int n = 1; n <= 4; ++n) {
    std::map<Partition, int> expected;
    for (const auto& l : partitions_of(n)) expected[l] = static_cast<int>(syt_count(l).get_si());
    const auto got = decompose(regular_representation(n));
    c.expect(got == expected, "regular H_" + std::to_string(n) + " " + detail::show(got));
  }
  for (int m = 0; m <= 4; ++m)
    for (const auto& l : partitions_of(m)) {
      const auto s = specht_module(l).presentation;
      for (int k = 0; m + k <= 6; ++k) {
        std::map<Partition, int> expected;
        for (const auto& mu : pieri_add(l, k)) expected[mu] = 1;
        const auto got = decompose(induce_pair(s, one_dim_rep(k, OneDimKind::index)));
        c.expect(got == expected, "Ind (" + l.to_string() + ") k=" + std::to_string(k) + " " + detail::show(got));
      }
    }
  return c.result(3, "decomposition oracle");
}

inline CriterionResult criterion_coinvariants() {
  detail::Checker c;
  for (int size = 0; size <= 3; ++size)
    for (const auto& l : partitions_of(size)) {
      std::map<int, std::map<Partition, int>> stable_value;  // a -> decomposition
      for (int n = size + l.first(); n <= 6; ++n) {
        const auto s = specht_module(pad(l, n)).presentation;
        for (int a = 0; a <= n; ++a) {
          const auto q = coinvariants(s, a);
          const std::string tag = "(" + l.to_string() + ") n=" + std::to_string(n) + " a=" + std::to_string(a);
          c.expect((q.module.dim() == 0) == (a < size), "zero iff a<|lambda| " + tag);
          const auto dec = decompose(q.module);
          if (a == size) c.expect(dec == std::map<Partition, int>{{l, 1}}, "a=|lambda| gives S^lambda " + tag);
          if (n >= a + size) {
            auto [it, fresh] = stable_value.emplace(a, dec);
            if (!fresh) c.expect(it->second == dec, "n-independence " + tag + " " + detail::show(dec));
          }
        }
      }
    }
  return c.result(4, "coinvariant lemmas");
}

inline CriterionResult criterion_degrees(const VerifyConfig& cfg) {
  detail::Checker c;
  for (int m = 1; m <= 3; ++m) {
    const auto r = degrees(build_Mm(m, cfg.n_max_free), cfg.a_max);
    c.expect(r.well_defined, "T well defined M(" + std::to_string(m) + ")");
    c.expect(r.injective_degree == 0, "inj-deg M(" + std::to_string(m) + ") = " + std::to_string(r.injective_degree));
    c.expect(r.surjective_degree == m, "sur-deg M(" + std::to_string(m) + ") = " + std::to_string(r.surjective_degree));
  }
  for (const auto& l : detail::degree_family()) {
    const auto r = degrees(build_M_specht(l, cfg.n_max), cfg.a_max);
    c.expect(r.well_defined, "T well defined (" + l.to_string() + ")");
    c.expect(r.stability_degree == l.first(),
             "stability degree (" + l.to_string() + ") = " + std::to_string(r.stability_degree));
  }
  return c.result(5, "degree theorems");
}

inline CriterionResult criterion_weight(const VerifyConfig& cfg) {
  detail::Checker c;
  for (const auto& l : detail::degree_family()) {
    const int w = weight(build_M_specht(l, cfg.n_max));
    c.expect(w == l.size(), "weight (" + l.to_string() + ") = " + std::to_string(w));
  }
  return c.result(6, "weight");
}

inline CriterionResult criterion_stability(const VerifyConfig& cfg) {
  detail::Checker c;
  for (const auto& l : detail::degree_family()) {
    const auto v = build_M_specht(l, cfg.n_max);
    const auto verdict = is_uniformly_stable(v, cfg.a_max);
    const std::string tag = "(" + l.to_string() + ")";
    c.expect(verdict.stable, "stable " + tag);
    c.expect(verdict.onset <= l.first() + l.size(), "onset " + tag + " = " + std::to_string(verdict.onset));
    for (int n = 0; n <= v.n_max; ++n) {
      const auto got = decompose(v.at(n));
      const auto expected = n < l.size() ? std::map<Partition, int>{} : stable_multiplicity_oracle(l, n);
      c.expect(got == expected, "Pieri oracle " + tag + " n=" + std::to_string(n) + " " + detail::show(got));
    }
  }
  return c.result(7, "stability pipeline");
}

inline CriterionResult criterion_shift(const VerifyConfig& cfg) {
  detail::Checker c;
  for (int m = 1; m <= 3; ++m)
    for (int a = 0; a <= 2; ++a) {
      const auto r = shift_decompose_Mm(m, a, cfg.n_max_free);
      c.expect(r.ok(), "m=" + std::to_string(m) + " a=" + std::to_string(a) + " " + shift_to_json(r).dump());
    }
  return c.result(8, "shift decomposition");
}

inline CriterionResult criterion_double_cosets(const VerifyConfig& cfg) {
  detail::Checker c;
  for (int a = 0; a <= 2; ++a)
    for (int m = 0; m <= 3; ++m) {
      const auto r = double_coset_stabilization(a, m, cfg.n_max_free);
      const std::string tag = "a=" + std::to_string(a) + " m=" + std::to_string(m);
      c.expect(r.inclusions_hold, "inclusions " + tag);
      c.expect(r.tableau_bijection, "tableau count " + tag);
      c.expect(r.stable_by_m, "stable by m " + tag + " from " + std::to_string(r.stable_from));
    }
  return c.result(9, "double-coset combinatorics");
}

inline CriterionResult criterion_noetherian(const VerifyConfig& cfg) {
  detail::Checker c;
  const auto r = noetherian_experiment(2, cfg.trials, cfg.seed, cfg.n_max_free);
  for (std::size_t t = 0; t < r.runs.size(); ++t) {
    c.expect(r.runs[t].finitely_generated, "trial " + std::to_string(t) + " generation");
    c.expect(r.runs[t].verdict.stable, "trial " + std::to_string(t) + " stability");
  }
  auto res = c.result(10, "noetherian evidence");
  if (res.passed) res.detail += ", max generation degree " + std::to_string(r.max_generation_degree);
  return res;
}

inline CriterionResult criterion_converse(const VerifyConfig& cfg) {
  detail::Checker c;
  const auto v = non_finitely_generated(cfg.n_max_free);
  const auto verdict = is_uniformly_stable(v, cfg.a_max);
  c.expect(!verdict.stable, "verdict must be unstable");
  for (std::size_t n = 0; n < verdict.multiplicity.size(); ++n)
    c.expect(!verdict.multiplicity[n], "multiplicities change at n=" + std::to_string(n));
  const auto table = multiplicity_table(v);
  for (int n = 0; n <= v.n_max; ++n)
    for (int j = 0; 2 * j <= n; ++j)
      c.expect(table.at(j == 0 ? Partition() : Partition({j}), n) == n - 2 * j + 1,
               "c_(" + std::to_string(j) + ")," + std::to_string(n));
  return c.result(11, "non-finitely-generated converse");
}

inline std::vector<CriterionResult> verify_criteria(const VerifyConfig& cfg = {}) {
  std::vector<std::pair<std::pair<int, std::string>, std::function<CriterionResult()>>> runs = {
      {{1, "relation suite"}, [] { return criterion_relations(); }},
      {{2, "seminormal suite"}, [] { return criterion_seminormal(); }},
      {{3, "decomposition oracle"}, [] { return criterion_decomposition(); }},
      {{4, "coinvariant lemmas"}, [] { return criterion_coinvariants(); }},
      {{5, "degree theorems"}, [&] { return criterion_degrees(cfg); }},
      {{6, "weight"}, [&] { return criterion_weight(cfg); }},
      {{7, "stability pipeline"}, [&] { return criterion_stability(cfg); }},
      {{8, "shift decomposition"}, [&] { return criterion_shift(cfg); }},
      {{9, "double-coset combinatorics"}, [&] { return criterion_double_cosets(cfg); }},
      {{10, "noetherian evidence"}, [&] { return criterion_noetherian(cfg); }},
      {{11, "non-finitely-generated converse"}, [&] { return criterion_converse(cfg); }},
  };
  std::vector<CriterionResult> out;
  for (auto& [key, fn] : runs) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({key.first, key.second, false, std::string("error: ") + e.what()});
    }
  }
  return out;
}

inline Json report_json(const VerifyConfig& cfg, const std::vector<CriterionResult>& results) {
  Json crit = Json::array();
  bool all = true;
  for (const auto& r : results) {
    crit.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  return Json{{"schema", kSchema},
              {"config", Json{{"n_max", cfg.n_max}, {"n_max_free", cfg.n_max_free}, {"a_max", cfg.a_max},
                              {"trials", cfg.trials}, {"seed", cfg.seed}}},
              {"criteria", std::move(crit)},
              {"all_passed", all}};
}

// Criteria 1-11, then criterion 12: a second run must give a byte-identical report.
inline std::vector<CriterionResult> verify_all(const VerifyConfig& cfg = {}) {
  auto first = verify_criteria(cfg);
  const std::string a = dump(report_json(cfg, first));
  const std::string b = dump(report_json(cfg, verify_criteria(cfg)));
  first.push_back({12, "determinism", a == b, a == b ? "two runs byte-identical" : "reports differ"});
  return first;
}

}  // namespace hecke_stab
