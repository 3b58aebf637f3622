// Command-line front end: builds sequences and reports degrees, weights,
// multiplicities and stability verdicts as JSON or CSV.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hecke_stab.hpp"

namespace {

using namespace hecke_stab;

constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

struct InputError : Error {
  using Error::Error;
};

void print_error(const std::string& tag, const std::string& message) {
  std::cerr << Json{{"schema", kSchema}, {"error", tag}, {"message", message}}.dump() << "\n";
}

// "1 2 1", "1,2,1"; "" or "e" is the empty word.
std::vector<int> parse_word(const std::string& s) {
  std::string t = s;
  for (char& ch : t)
    if (ch == ',') ch = ' ';
  std::istringstream in(t);
  std::vector<int> word;
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError("parse", "word '" + s + "'");
    }
    if (used != tok.size()) throw InputError("parse", "word '" + s + "'");
    word.push_back(v);
  }
  return word;
}

Partition parse_lambda(std::string s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return Partition::parse(s);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("io", "cannot write " + out_path);
  out << text;
}

struct Arithmetic {
  std::string mode = "exact";
  int count = 3;
  std::uint64_t seed = 1;
  bool strict = false;

  void add_to(CLI::App* app) {
    app->add_option("--mode", mode, "rank arithmetic")->check(CLI::IsMember({"exact", "specialized"}));
    app->add_option("--spec-count", count, "specializations per rank");
    app->add_option("--spec-seed", seed, "specialization seed");
    app->add_flag("--strict", strict, "forbid specialized arithmetic");
  }
  RankMode rank_mode() const {
    if (mode == "specialized") {
      if (strict) throw InputError("strict", "specialized arithmetic is disabled by --strict");
      return RankMode::specialized(count, seed);
    }
    return RankMode::exact();
  }
  Json describe() const {
    if (mode == "specialized") return Json{{"mode", mode}, {"count", count}, {"seed", seed}};
    return Json{{"mode", mode}};
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Exact computations with FI_H-modules over Iwahori-Hecke algebras of type A"};
  app.require_subcommand(1);

  // hecke mult
  auto* hecke = app.add_subcommand("hecke", "Hecke algebra arithmetic");
  hecke->require_subcommand(1);
  auto* mult = hecke->add_subcommand("mult", "product T_left * T_right in the T-basis");
  int mult_n = 0;
  std::string left, right;
  mult->add_option("--n", mult_n, "rank")->required()->check(CLI::Range(0, 12));
  mult->add_option("--left", left, "generator word")->required();
  mult->add_option("--right", right, "generator word")->required();

  auto* seq = app.add_subcommand("seq", "consistent sequences");
  seq->require_subcommand(1);

  auto* build = seq->add_subcommand("build", "build and serialize a sequence");
  std::string kind, lambda_text, out_path;
  int m = 0, n_max = 6;
  build->add_option("--kind", kind, "Mm or M-specht")->required()->check(CLI::IsMember({"Mm", "M-specht"}));
  build->add_option("--m", m, "m for M(m)")->check(CLI::Range(0, 6));
  build->add_option("--lambda", lambda_text, "partition, e.g. \"2,1\"");
  build->add_option("--nmax", n_max, "truncation")->check(CLI::Range(1, 7));
  build->add_option("--out", out_path, "output file (stdout if omitted)");

  std::string in_path;
  int a_max = 2;
  Arithmetic arith;

  auto* deg = seq->add_subcommand("degrees", "observed stability, injective and surjective degrees");
  bool literal_q = false;
  deg->add_option("--in", in_path, "sequence file")->required();
  deg->add_option("--amax", a_max, "largest a probed")->check(CLI::NonNegativeNumber);
  deg->add_flag("--literal-q", literal_q, "use (T_s - 1)v instead of (T_s - q)v");
  arith.add_to(deg);

  auto* wt = seq->add_subcommand("weight", "weight of a sequence");
  wt->add_option("--in", in_path, "sequence file")->required();

  auto* mults = seq->add_subcommand("multiplicities", "table c_{lambda,n}");
  std::string format = "json";
  mults->add_option("--in", in_path, "sequence file")->required();
  mults->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* stab = seq->add_subcommand("check-stable", "uniform representation stability verdict");
  stab->add_option("--in", in_path, "sequence file")->required();
  stab->add_option("--amax", a_max, "largest a probed for the degree bound")->check(CLI::NonNegativeNumber);
  arith.add_to(stab);

  auto* shd = seq->add_subcommand("shift-decompose", "split S_{+a} M(m) as M(m) + C_a");
  int shift_a = 1;
  shd->add_option("--m", m, "m")->required()->check(CLI::Range(1, 4));
  shd->add_option("--a", shift_a, "shift")->required()->check(CLI::NonNegativeNumber);
  shd->add_option("--nmax", n_max, "truncation")->check(CLI::Range(1, 7));

  auto* noe = seq->add_subcommand("noetherian", "random subsequences of M(m)");
  int trials = 20;
  std::uint64_t seed = 42;
  noe->add_option("--m", m, "m")->required()->check(CLI::Range(0, 4));
  noe->add_option("--trials", trials, "trials")->check(CLI::NonNegativeNumber);
  noe->add_option("--seed", seed, "seed");
  noe->add_option("--nmax", n_max, "truncation")->check(CLI::Range(2, 7));

  auto* verify = app.add_subcommand("verify", "acceptance suite");
  verify->require_subcommand(1);
  auto* all = verify->add_subcommand("all", "run every criterion");
  int verify_n_max = 7;
  std::string report_path;
  all->add_option("--nmax", verify_n_max, "truncation for the M(S^lambda) families")->check(CLI::Range(1, 7));
  all->add_option("--out", report_path, "report file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return kExitBadInput;
  }

  if (mult->parsed()) {
    const auto x = HeckeElement::word(static_cast<std::size_t>(mult_n), parse_word(left));
    const auto y = HeckeElement::word(static_cast<std::size_t>(mult_n), parse_word(right));
    Json product = Json::object();
    for (const auto& [label, c] : (x * y).labelled_terms()) product[label] = c.to_string();
    emit(dump(product), "");
    return 0;
  }
  if (build->parsed()) {
    ConsistentSequence v;
    if (kind == "Mm") {
      if (build->count("--m") == 0) throw InputError("usage", "--kind Mm needs --m");
      v = build_Mm(m, n_max);
    } else {
      if (build->count("--lambda") == 0) throw InputError("usage", "--kind M-specht needs --lambda");
      v = build_M_specht(parse_lambda(lambda_text), n_max);
    }
    emit(dump(sequence_to_json(v)), out_path);
    return 0;
  }
  if (deg->parsed()) {
    const auto v = read_sequence(in_path);
    if (a_max > v.n_max) throw InputError("range", "--amax exceeds n_max");
    const auto mode = literal_q ? CoinvariantMode::literal : CoinvariantMode::q_twisted;
    Json j = degrees_to_json(degrees(v, a_max, arith.rank_mode(), mode));
    j["label"] = v.label;
    j["relations"] = literal_q ? "(T_s - 1)v (literal)" : "(T_s - q)v";
    j["note"] = "Q_n is spanned by (T_s - q)v: at generic q, T_s - 1 is invertible and the literal quotient vanishes";
    j["arithmetic"] = arith.describe();
    emit(dump(Json{{"schema", kSchema}, {"degrees", std::move(j)}}), "");
    return 0;
  }
  if (wt->parsed()) {
    const auto v = read_sequence(in_path);
    emit(dump(Json{{"schema", kSchema}, {"label", v.label}, {"n_max", v.n_max}, {"weight", weight(v)}}), "");
    return 0;
  }
  if (mults->parsed()) {
    const auto v = read_sequence(in_path);
    const auto t = multiplicity_table(v);
    if (format == "csv")
      emit(table_to_csv(t), "");
    else
      emit(dump(Json{{"schema", kSchema}, {"label", v.label}, {"multiplicities", table_to_json(t)}}), "");
    return 0;
  }
  if (stab->parsed()) {
    const auto v = read_sequence(in_path);
    Json j = verdict_to_json(is_uniformly_stable(v, std::min(a_max, v.n_max), arith.rank_mode()));
    j["arithmetic"] = arith.describe();
    emit(dump(Json{{"schema", kSchema}, {"label", v.label}, {"verdict", std::move(j)}}), "");
    return 0;
  }
  if (shd->parsed()) {
    if (shift_a > n_max) throw InputError("range", "--a exceeds --nmax");
    emit(dump(Json{{"schema", kSchema}, {"shift_decomposition", shift_to_json(shift_decompose_Mm(m, shift_a, n_max))}}), "");
    return 0;
  }
  if (noe->parsed()) {
    emit(dump(Json{{"schema", kSchema}, {"noetherian", noetherian_to_json(noetherian_experiment(m, trials, seed, n_max))}}),
         "");
    return 0;
  }
  if (all->parsed()) {
    VerifyConfig cfg;
    cfg.n_max = verify_n_max;
    cfg.n_max_free = std::min(verify_n_max, 6);
    const auto results = verify_all(cfg);
    const Json report = report_json(cfg, results);
    emit(dump(report), report_path);
    for (const auto& r : results)
      std::cerr << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << "\n";
    return report["all_passed"].get<bool>() ? 0 : kExitFailed;
  }
  return kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hecke_stab::Error& e) {
    print_error(e.tag(), e.what());
    return e.tag() == "internal" ? kExitFailed : kExitBadInput;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return kExitFailed;
  }
}
