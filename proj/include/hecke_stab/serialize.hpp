#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hecke_stab/error.hpp"
#include "hecke_stab/matrix.hpp"
#include "hecke_stab/module.hpp"
#include "hecke_stab/sequence.hpp"

namespace hecke_stab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hecke-stab/1";

// {"rows", "cols", "entries": [[i, j, "num/den"], ...]} in column order.
inline Json matrix_to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, x] : m.column(j)) entries.push_back(Json::array({i, j, x.serialize()}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline ExactMatrix matrix_from_json(const Json& j) {
  try {
    ExactMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    for (const auto& e : j.at("entries")) {
      const auto r = e.at(0).get<std::size_t>();
      const auto c = e.at(1).get<std::size_t>();
      if (r >= m.rows() || c >= m.cols()) throw Error("parse", "matrix entry out of range");
      m.set(r, c, Scalar::parse(e.at(2).get<std::string>()));
    }
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw Error("parse", ex.what());
  }
}

inline Json sequence_to_json(const ConsistentSequence& v) {
  Json degrees = Json::array();
  for (int n = 0; n <= v.n_max; ++n) {
    Json gens = Json::array();
    for (const auto& g : v.at(n).generators()) gens.push_back(matrix_to_json(g));
    degrees.push_back(Json{{"n", n}, {"dim", v.dim(n)}, {"generators", std::move(gens)}});
  }
  Json connectors = Json::array();
  for (const auto& c : v.connectors) connectors.push_back(matrix_to_json(c));
  return Json{{"schema", kSchema},
              {"label", v.label},
              {"n_max", v.n_max},
              {"degrees", std::move(degrees)},
              {"connectors", std::move(connectors)}};
}

// Rebuilds and re-verifies (relations and consistency).
inline ConsistentSequence sequence_from_json(const Json& j) {
  try {
    if (j.at("schema").get<std::string>() != kSchema) throw Error("parse", "unknown schema");
    ConsistentSequence v{j.at("label").get<std::string>(), j.at("n_max").get<int>(), {}, {}};
    if (v.n_max < 0) throw Error("parse", "n_max");
    const auto& degrees = j.at("degrees");
    if (degrees.size() != static_cast<std::size_t>(v.n_max + 1)) throw Error("parse", "degree count");
    for (int n = 0; n <= v.n_max; ++n) {
      const auto& d = degrees.at(static_cast<std::size_t>(n));
      if (d.at("n").get<int>() != n) throw Error("parse", "degree order");
      std::vector<ExactMatrix> gens;
      for (const auto& g : d.at("generators")) gens.push_back(matrix_from_json(g));
      v.modules.emplace_back(static_cast<std::size_t>(n), d.at("dim").get<std::size_t>(), std::move(gens), v.label);
    }
    for (const auto& c : j.at("connectors")) v.connectors.push_back(matrix_from_json(c));
    if (!check_consistency(v).ok()) throw Error("not consistent", "sequence '" + v.label + "'");
    return v;
  } catch (const nlohmann::json::exception& ex) {
    throw Error("parse", ex.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void write_sequence(const ConsistentSequence& v, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io", "cannot write " + path);
  out << dump(sequence_to_json(v));
}

inline ConsistentSequence read_sequence(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const nlohmann::json::exception& ex) {
    throw Error("parse", ex.what());
  }
  return sequence_from_json(j);
}

// Report helpers shared by the CLI and the acceptance suite.

inline Json partition_json(const Partition& p) { return Json(p.parts()); }

inline Json table_to_json(const MultiplicityTable& t) {
  Json rows = Json::array();
  for (const auto& [lambda, r] : t.rows) rows.push_back(Json{{"lambda", partition_json(lambda)}, {"c", r}});
  Json invalid = Json::array();
  for (const auto& [mu, c] : t.invalid_pad) invalid.push_back(Json{{"mu", partition_json(mu)}, {"c", c}});
  return Json{{"n_max", t.n_max}, {"rows", std::move(rows)}, {"invalid_pad", std::move(invalid)}};
}

// Header "lambda,n=0,...,n=N"; the empty partition is written "()".
inline std::string table_to_csv(const MultiplicityTable& t) {
  std::string out = "lambda";
  for (int n = 0; n <= t.n_max; ++n) out += ",n=" + std::to_string(n);
  out += "\n";
  for (const auto& [lambda, r] : t.rows) {
    out += "\"(" + lambda.to_string() + ")\"";
    for (int c : r) out += "," + std::to_string(c);
    out += "\n";
  }
  for (const auto& [mu, c] : t.invalid_pad) out += "\"invalid-pad:(" + mu.to_string() + ")\"," + std::to_string(c) + "\n";
  return out;
}

inline Json degrees_to_json(const DegreeReport& r) {
  Json probes = Json::array();
  for (const auto& p : r.probes)
    probes.push_back(Json{{"a", p.a},
                          {"n", p.n},
                          {"source_dim", p.source_dim},
                          {"target_dim", p.target_dim},
                          {"rank", p.rank},
                          {"injective", p.injective()},
                          {"surjective", p.surjective()}});
  Json viol = Json::array();
  for (const auto& [a, n] : r.monotonicity_violations) viol.push_back(Json{{"a", a}, {"n", n}});
  return Json{{"scope", "within truncation"},
              {"a_max", r.a_max},
              {"n_max", r.n_max},
              {"stability_degree", r.stability_degree},
              {"injective_degree", r.injective_degree},
              {"surjective_degree", r.surjective_degree},
              {"maps_well_defined", r.well_defined},
              {"monotonicity_violations", std::move(viol)},
              {"probes", std::move(probes)}};
}

inline Json verdict_to_json(const StabilityVerdict& v) {
  return Json{{"scope", "within truncation"},
              {"stable", v.stable},
              {"onset", v.onset},
              {"n_max", v.n_max},
              {"injective", v.injective},
              {"generated_by_image", v.generated},
              {"multiplicities_constant", v.multiplicity},
              {"stability_degree", v.stability_degree},
              {"weight", v.weight},
              {"predicted_bound", v.predicted_bound},
              {"onset_within_bound", v.within_bound}};
}

inline Json shift_to_json(const ShiftDecomposition& r) {
  return Json{{"m", r.m},
              {"a", r.a},
              {"n_max", r.n_max},
              {"shifted_dims", r.shifted_dims},
              {"identity_block_dims", r.identity_dims},
              {"complement_dims", r.complement_dims},
              {"direct_sum", r.direct_sum},
              {"identity_block_isomorphic_to_M(m)", r.identity_iso},
              {"complement_consistent", r.complement_consistent},
              {"complement_generation_degree", r.complement_generation_degree},
              {"ok", r.ok()}};
}

inline Json noetherian_to_json(const NoetherianReport& r) {
  Json runs = Json::array();
  for (const auto& t : r.runs) {
    Json seeds = Json::array();
    for (const auto& s : t.seeds) {
      Json vec = Json::array();
      for (const auto& [i, x] : s.vector) vec.push_back(Json::array({i, x.serialize()}));
      seeds.push_back(Json{{"degree", s.degree}, {"vector", std::move(vec)}});
    }
    runs.push_back(Json{{"seeds", std::move(seeds)},
                        {"dims", t.dims},
                        {"generation_degree", t.generation_degree},
                        {"finitely_generated", t.finitely_generated},
                        {"stable", t.verdict.stable},
                        {"onset", t.verdict.onset},
                        {"multiplicities", table_to_json(t.table)}});
  }
  return Json{{"scope", "within truncation"},
              {"m", r.m},
              {"trials", r.trials},
              {"seed", r.seed},
              {"n_max", r.n_max},
              {"max_generation_degree", r.max_generation_degree},
              {"all_finitely_generated", r.all_finitely_generated},
              {"all_stable", r.all_stable},
              {"runs", std::move(runs)}};
}

}  // namespace hecke_stab
