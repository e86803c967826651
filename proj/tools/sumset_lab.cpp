// sumset-lab: command-line front end for the sumset library.
//
// Exit codes: 0 verified (or a read command succeeded), 1 refuted,
// 2 budget exhausted, 3 usage error.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sumset/bounds.hpp"
#include "sumset/certificate.hpp"
#include "sumset/enumerate.hpp"
#include "sumset/families.hpp"
#include "sumset/structure.hpp"
#include "sumset/sumset.hpp"
#include "sumset/verify.hpp"

namespace {

using sumset::Json;

constexpr int kUsageError = 3;

struct Globals {
  bool json = false;
  std::uint64_t budget = sumset::kDefaultBudget;
  int jobs = 1;
  std::optional<int> cap;
  std::string out_dir;
};

sumset::Normalization read_set(const std::string& literal) {
  const auto raw = sumset::parse_set_literal(literal);
  return sumset::normalize(raw);
}

void print_normalization_note(const std::string& input, const sumset::Normalization& n) {
  if (n.offset != 0 || n.scale != 1) {
    std::cout << "input " << input << " normalized to " << sumset::to_literal(n.set) << " (offset " << n.offset
              << ", scale " << n.scale << ")\n";
  }
}

int cmd_compute(const Globals& g, const std::string& input) {
  const auto n = read_set(input);
  if (n.set.k() < 3) throw sumset::Error("bound report needs at least three elements");
  const auto report = sumset::evaluate_bounds(n.set);
  if (g.json) {
    auto j = Json::parse(sumset::report_json(report));
    Json out;
    out["input"] = input;
    out["normalized"] = sumset::to_literal(n.set);
    out["offset"] = n.offset;
    out["scale"] = n.scale;
    out["report"] = j;
    std::cout << out.dump() << '\n';
  } else {
    print_normalization_note(input, n);
    std::cout << sumset::format_report(report);
  }
  return 0;
}

Json analyze_json(const sumset::NormalizedSet& a) {
  Json j;
  j["set"] = sumset::to_literal(a);
  j["k"] = a.k();
  j["l"] = a.l();
  j["2A"] = sumset::to_literal(sumset::sumset(a.set(), a.set()));
  j["2hatA"] = sumset::to_literal(sumset::restricted_sumset(a.set()));
  if (a.k() >= 3) {
    j["B"] = sumset::to_literal(sumset::exceptional_set(a));
    j["growth_hypotheses"] = sumset::satisfies_growth_hypotheses(a);
    if (sumset::satisfies_growth_hypotheses(a)) {
      const auto e = sumset::exceptional_profile(a);
      j["m"] = e.m;
      if (e.m >= 2) {
        j["D"] = sumset::to_literal(e.D);
        j["C"] = sumset::to_literal(e.C);
        const auto gp = sumset::gap_patterns(a);
        j["window"] = {gp.window_lo, gp.window_hi};
        j["window_missing"] = sumset::to_literal(gp.missing);
        const auto p4 = sumset::check_P4(a);
        j["P4"] = {{"both_missing", p4.both_missing}, {"structure", sumset::to_string(p4.structure)}};
      }
    }
  }
  const auto w = sumset::witness_profile(a);
  j["W"] = sumset::to_literal(w.W);
  if (w.W.size() == 2) {
    try {
      const auto d = sumset::decompose(a, *w.w1, *w.w2);
      j["decomposition"] = {{"m", d.m},
                            {"V", d.V},
                            {"H", sumset::to_literal(d.H)},
                            {"U", sumset::to_literal(d.U)},
                            {"D_minus", sumset::to_literal(d.Dminus)},
                            {"reconstructs", d.reconstructs}};
    } catch (const sumset::Error& e) {
      j["decomposition"] = {{"error", e.what()}};
    }
  }
  if (const auto s = sumset::find_admissible_split(a)) {
    const auto t = sumset::split_at(a, *s);
    j["split"] = {{"s", t.s},
                  {"A1", sumset::to_literal(t.A1)},
                  {"A2", sumset::to_literal(t.A2)},
                  {"A2_star", sumset::to_literal(t.A2star)},
                  {"overlap", sumset::to_literal(t.overlap)},
                  {"overlap_matches", t.overlap_matches},
                  {"count_inequality", t.count_inequality}};
  }
  return j;
}

int cmd_analyze(const Globals& g, const std::string& input) {
  const auto n = read_set(input);
  const auto j = analyze_json(n.set);
  if (g.json) {
    std::cout << j.dump() << '\n';
    return 0;
  }
  print_normalization_note(input, n);
  for (const auto& [key, value] : j.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return 0;
}

int cmd_families(const Globals& g, const std::string& kind, int k, std::optional<int> theta,
                 std::optional<int> index, bool all) {
  std::vector<sumset::FamilyMember> members;
  if (all) {
    members = sumset::family_members(k);
  } else {
    if (kind.empty()) throw sumset::Error("give --kind or --all");
    const auto spec = sumset::FamilySpec::make(sumset::parse_family_kind(kind), k, theta, index);
    members.push_back({spec, sumset::generate(spec)});
  }
  if (g.json) {
    Json arr = Json::array();
    for (const auto& m : members) {
      Json o{{"kind", std::string(sumset::to_string(m.spec.kind()))}, {"k", m.spec.k()}};
      if (m.spec.theta()) o["theta"] = *m.spec.theta();
      if (m.spec.sporadic_index()) o["index"] = *m.spec.sporadic_index();
      o["set"] = sumset::to_literal(m.set);
      o["card_2hatA"] = sumset::restricted_sumset_size(m.set.set());
      arr.push_back(o);
    }
    std::cout << arr.dump() << '\n';
  } else {
    for (const auto& m : members) std::cout << m.spec.describe() << '\t' << sumset::to_literal(m.set) << '\n';
  }
  return 0;
}

int cmd_enumerate(const Globals& g, int k, int l_min, int l_max, const std::vector<std::string>& constraints) {
  sumset::EnumerationQuery q;
  q.k = k;
  q.l_min = l_min;
  q.l_max = l_max;
  q.constraints = sumset::kGcdOne;
  for (const auto& c : constraints) q.constraints |= sumset::parse_constraint(c);
  q.budget = g.budget;
  sumset::EnumerationStats st;
  Json listed = Json::array();
  auto emit = [&](const sumset::NormalizedSet& s) {
    if (g.json) {
      listed.push_back(sumset::to_literal(s));
    } else {
      std::cout << sumset::to_literal(s) << '\n';
    }
  };
  if (g.jobs == 1) {
    st = sumset::enumerate(q, emit);
  } else {
    for (const auto& s : sumset::enumerate_all_parallel(q, g.jobs, &st)) emit(s);
  }
  if (g.json) {
    Json out{{"sets", listed}, {"count", st.yielded}, {"nodes", st.nodes}, {"truncated", st.truncated}};
    std::cout << out.dump() << '\n';
  } else if (st.truncated) {
    std::cout << "# truncated: budget of " << g.budget << " nodes exhausted\n";
  }
  return st.truncated ? 2 : 0;
}

int cmd_classify(const Globals& g, int k, int l) {
  sumset::RunOptions opt;
  opt.jobs = g.jobs;
  opt.budget = g.budget;
  sumset::EnumerationStats st;
  const auto sets = sumset::classify_extremal(k, l, opt, &st);
  if (g.json) {
    Json out;
    out["k"] = k;
    out["l"] = l;
    out["target"] = 3 * k - 7;
    out["sets"] = Json::array();
    for (const auto& s : sets) out["sets"].push_back(sumset::to_literal(s));
    out["count"] = sets.size();
    out["enumerated"] = st.yielded;
    std::cout << out.dump() << '\n';
  } else {
    for (const auto& s : sets) std::cout << sumset::to_literal(s) << '\n';
  }
  return 0;
}

int cmd_certify(const Globals& g, const std::string& theorem, int k_min_opt, int k_max, std::string out) {
  sumset::RunOptions opt;
  opt.jobs = g.jobs;
  opt.budget = g.budget;
  sumset::Certificate cert;
  if (theorem == "conjecture") {
    cert = sumset::verify_conjecture(k_max, g.cap.value_or(2 * k_max + 4), opt);
  } else {
    opt.cap = g.cap;
    if (theorem == "1") {
      cert = sumset::verify_theorem1(k_min_opt > 0 ? k_min_opt : 3, k_max, opt);
    } else if (theorem == "2") {
      cert = sumset::verify_theorem2(k_min_opt > 0 ? k_min_opt : 3, k_max, opt);
    } else if (theorem == "3") {
      cert = sumset::verify_theorem3(k_min_opt > 0 ? k_min_opt : 4, k_max, opt);
    } else if (theorem == "lemmas") {
      cert = sumset::sweep_lemmas(k_min_opt > 0 ? k_min_opt : 3, k_max, opt);
    } else {
      throw sumset::Error("unknown theorem '" + theorem + "'");
    }
  }
  if (out.empty() && !g.out_dir.empty()) {
    out = (std::filesystem::path(g.out_dir) / (cert.claim + ".json")).string();
  }
  const std::string text = cert.dump();
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw sumset::Error("cannot write " + out);
    f << text;
    std::cout << cert.claim << ": " << sumset::to_string(cert.outcome) << " (" << cert.counterexamples.size()
              << " counterexamples, " << cert.wall_time_ms << " ms) -> " << out << '\n';
  }
  return sumset::exit_code(cert.outcome);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive tools for sumsets and restricted sumsets of integer sets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sumset::kToolVersion));
  app.set_config("--config", "", "key=value file supplying defaults for the global options");

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--budget", g.budget, "Node budget per enumeration")->check(CLI::PositiveNumber);
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--cap", g.cap, "Largest a_{k-1} (certify 1, 2, lemmas) or largest l (certify conjecture)");
  app.add_option("--out-dir", g.out_dir, "Directory for certificates when --out is not given");

  std::string set_literal;
  auto* compute = app.add_subcommand("compute", "Bound report for one set")->fallthrough();
  compute->add_option("set", set_literal, "Set literal such as {0,1,4,5,6,9}")->required();

  auto* analyze = app.add_subcommand("analyze", "Exceptional set, witnesses, decomposition and split")->fallthrough();
  analyze->add_option("set", set_literal, "Set literal")->required();

  std::string kind;
  int k = 0;
  std::optional<int> theta;
  std::optional<int> index;
  bool all = false;
  auto* families = app.add_subcommand("families", "Generate family members")->fallthrough();
  families->add_option("--kind", kind, "Family kind, e.g. t3_interval");
  families->add_option("--k", k, "Cardinality")->required();
  families->add_option("--theta", theta, "Family parameter");
  families->add_option("--index", index, "Sporadic index at this k");
  families->add_flag("--all", all, "Every family member at this k");

  int l = -1;
  int l_min = -1;
  int l_max = -1;
  std::vector<std::string> constraints;
  auto* enumerate = app.add_subcommand("enumerate", "Stream normalized sets")->fallthrough();
  enumerate->add_option("--k", k, "Cardinality")->required();
  enumerate->add_option("--l", l, "Exact maximum element");
  enumerate->add_option("--l-min", l_min, "Smallest maximum element");
  enumerate->add_option("--l-max", l_max, "Largest maximum element");
  enumerate->add_option("--constraint", constraints, "Named constraint (repeatable)");

  auto* classify = app.add_subcommand("classify", "Sets with |2^A| = 3k-7 at fixed k and l")->fallthrough();
  classify->add_option("--k", k, "Cardinality")->required();
  classify->add_option("--l", l, "Maximum element")->required();

  std::string theorem;
  int k_min = 0;
  int k_max = 0;
  std::string out;
  auto* certify = app.add_subcommand("certify", "Run an exhaustive check and write a certificate")->fallthrough();
  certify->add_option("--theorem", theorem, "1, 2, 3, conjecture or lemmas")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "conjecture", "lemmas"}));
  certify->add_option("--k-min", k_min, "Smallest k (default per claim)");
  certify->add_option("--k-max", k_max, "Largest k")->required();
  certify->add_option("--out", out, "Certificate path (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*compute) return cmd_compute(g, set_literal);
    if (*analyze) return cmd_analyze(g, set_literal);
    if (*families) return cmd_families(g, kind, k, theta, index, all);
    if (*enumerate) {
      if (l >= 0) l_min = l_max = l;
      if (l_min < 0 || l_max < 0) throw sumset::Error("give --l or both --l-min and --l-max");
      return cmd_enumerate(g, k, l_min, l_max, constraints);
    }
    if (*classify) return cmd_classify(g, k, l);
    if (*certify) return cmd_certify(g, theorem, k_min, k_max, out);
  } catch (const sumset::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
