#include "lexraf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexraf/axioms.hpp"
#include "lexraf/characterization.hpp"
#include "lexraf/document.hpp"

namespace lexraf::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  for (const auto& item : split_commas(text)) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, flag + ": " + e.what());
    }
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, flag + ": expected at least one value");
  return out;
}

std::vector<AxiomId> parse_axioms(const std::string& text) {
  if (text == "all") return {all_axioms().begin(), all_axioms().end()};
  std::vector<AxiomId> out;
  for (const auto& name : split_commas(text)) {
    auto id = parse_axiom(name);
    if (!id) throw Error(ErrorKind::InvalidArgument, "--axioms: unknown axiom '" + name + "'");
    out.push_back(*id);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "--axioms: empty list");
  return out;
}

std::string verdict(Outcome o, const std::string& first, const std::string& second) {
  switch (o) {
    case Outcome::FirstPreferred: return first + " ≻ " + second;
    case Outcome::SecondPreferred: return second + " ≻ " + first;
    case Outcome::Indifferent: return first + " ∼ " + second;
  }
  return "?";
}

std::unique_ptr<PreferenceRelation> make_relation(const std::string& name, const ContextPtr& ctx,
                                                  const std::optional<WeightVector>& weights) {
  if (name == "lex") return std::make_unique<LexRelation>();
  if (name == "mep") {
    if (!ctx->payoffs()) {
      throw Error(ErrorKind::MissingPayoffs, "relation 'mep' needs pay-offs (field 'payoffs')");
    }
    return std::make_unique<UtilityRelation>(make_mep_relation());
  }
  if (name == "wlog") {
    if (!weights) {
      throw Error(ErrorKind::InvalidArgument, "relation 'wlog' needs weights (field 'weights')");
    }
    if (weights->size() != ctx->size()) {
      throw Error(ErrorKind::WeightArityMismatch, "expected one weight per alternative");
    }
    return std::make_unique<WlogRelation>(*weights);
  }
  throw Error(ErrorKind::InvalidArgument,
              "unknown relation '" + name + "' (expected lex, mep or wlog)");
}

// ---------------------------------------------------------------------------
// rank

struct RankOptions {
  std::string input;
  std::string relation = "lex";
  std::string format = "text";
};

int run_rank(const RankOptions& opt, std::ostream& out) {
  const auto loaded = load_document(parse_document(read_file(opt.input)));
  const auto rel = make_relation(opt.relation, loaded.context, loaded.weights);

  std::vector<std::size_t> order(loaded.rafs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rel->compare(loaded.rafs[a], loaded.rafs[b]) == Outcome::FirstPreferred;
  });
  std::vector<std::vector<std::size_t>> groups;
  for (auto idx : order) {
    if (groups.empty() || rel->compare(loaded.rafs[groups.back().front()], loaded.rafs[idx]) !=
                              Outcome::Indifferent) {
      groups.emplace_back();
    }
    groups.back().push_back(idx);
  }

  if (opt.format == "json") {
    Json ranking = Json::array();
    for (const auto& g : groups) {
      Json names = Json::array();
      for (auto idx : g) names.push_back(loaded.names[idx]);
      ranking.push_back(names);
    }
    out << Json{{"relation", rel->name()}, {"ranking", ranking}}.dump(2) << '\n';
    return kExitOk;
  }

  std::string chain;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::string line;
    for (std::size_t i = 0; i < groups[g].size(); ++i) {
      line += (i ? " ∼ " : "") + loaded.names[groups[g][i]];
    }
    out << g + 1 << ": " << line << '\n';
    chain += (g ? " ≻ " : "") + line;
  }
  out << chain << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check

struct CheckOptions {
  std::string input;
  std::string grid;
  std::size_t arity = 0;
  std::string relation;
  std::string axioms = "all";
  std::string format = "text";
  std::string payoffs;
  std::string weights;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  bool all_violations = false;
};

Json raf_json(const Raf& raf, const std::string& name) {
  Json values = Json::array();
  for (const auto& v : raf.values()) values.push_back(v.to_string());
  Json node = Json::object();
  if (!name.empty()) node["name"] = name;
  node["values"] = values;
  return node;
}

Json violation_json(const AxiomViolation& v, const std::vector<std::string>& names) {
  Json rafs = Json::array();
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    rafs.push_back(raf_json(v.witness[i], names.empty() ? "" : names[v.sample_indices[i]]));
  }
  Json observed = Json::array();
  for (auto o : v.observed) observed.push_back(std::string(to_string(o)));
  Json node = Json::object();
  node["rafs"] = rafs;
  node["k"] = v.k ? Json(*v.k) : Json(nullptr);
  node["observed"] = observed;
  return node;
}

std::string violation_text(const AxiomViolation& v, const std::vector<std::string>& names) {
  static const char* kRoles = "ABCD";
  std::string out;
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    out += i ? ", " : "";
    out += kRoles[i];
    out += " = ";
    if (!names.empty()) out += names[v.sample_indices[i]] + " ";
    out += to_string(v.witness[i]);
  }
  if (v.k) out += ", k = " + std::to_string(*v.k);
  out += "; observed";
  for (auto o : v.observed) out += " " + std::string(to_string(o));
  return out;
}

int run_check(const CheckOptions& opt, std::ostream& out) {
  if (opt.input.empty() == opt.grid.empty()) {
    throw Error(ErrorKind::InvalidArgument, "check needs exactly one of --input or --grid");
  }
  const auto axioms = parse_axioms(opt.axioms);

  std::vector<Raf> sample;
  std::vector<std::string> names;
  ContextPtr ctx;
  std::optional<WeightVector> weights;
  if (!opt.input.empty()) {
    auto loaded = load_document(parse_document(read_file(opt.input)));
    sample = std::move(loaded.rafs);
    names = std::move(loaded.names);
    ctx = loaded.context;
    weights = std::move(loaded.weights);
  } else {
    if (opt.arity < 2) throw Error(ErrorKind::InvalidArgument, "--arity must be at least 2");
    std::vector<Rational> payoffs(opt.arity, Rational(1));
    if (!opt.payoffs.empty()) payoffs = parse_rationals(opt.payoffs, "--payoffs");
    std::vector<unsigned> w(opt.arity, 1);
    if (!opt.weights.empty()) {
      w.clear();
      for (const auto& item : split_commas(opt.weights)) {
        auto r = Rational::parse(item);
        if (r.denominator() != 1 || r.sign() <= 0) {
          throw Error(ErrorKind::InvalidArgument, "--weights: expected positive integers");
        }
        w.push_back(static_cast<unsigned>(r.numerator()));
      }
    }
    ctx = PriorityContext::numbered(opt.arity, std::move(payoffs));
    weights = WeightVector(std::move(w));
    sample = grid_points(GridSpec(parse_rationals(opt.grid, "--grid"), opt.arity), ctx);
  }

  const auto rel = make_relation(opt.relation, ctx, weights);
  CheckConfig cfg;
  cfg.seed = opt.seed;
  cfg.samples = opt.samples;
  cfg.all_violations = opt.all_violations;
  const AxiomReport report = check_axioms(*rel, sample, axioms, cfg);

  if (opt.format == "json") {
    Json results = Json::array();
    for (const auto& r : report.results) {
      Json node = Json::object();
      node["axiom"] = std::string(to_string(r.axiom));
      node["status"] = r.passed() ? "pass" : "fail";
      node["mode"] = std::string(to_string(r.mode));
      node["tuples_examined"] = r.tuples_examined;
      node["qualifying"] = r.qualifying;
      node["vacuous"] = r.vacuous();
      node["violation_count"] = r.violation_count;
      node["witness"] = r.violations.empty() ? Json(nullptr) : violation_json(r.violations[0], names);
      if (opt.all_violations) {
        Json all = Json::array();
        for (const auto& v : r.violations) all.push_back(violation_json(v, names));
        node["violations"] = all;
      }
      results.push_back(node);
    }
    Json root = Json::object();
    root["relation"] = rel->name();
    root["sample_size"] = report.sample_size;
    root["passed"] = report.passed();
    root["results"] = results;
    out << root.dump(2) << '\n';
  } else {
    out << "relation: " << rel->name() << ", sample: " << report.sample_size << " RAFs\n";
    for (const auto& r : report.results) {
      out << to_string(r.axiom) << ": " << (r.passed() ? "PASS" : "FAIL");
      out << " (" << to_string(r.mode) << ", " << r.tuples_examined << " tuples examined, "
          << r.qualifying << " qualifying";
      if (!r.passed()) out << ", " << r.violation_count << " violations";
      out << ")";
      if (r.vacuous()) out << " [vacuous]";
      out << '\n';
      for (const auto& v : r.violations) out << "  witness: " << violation_text(v, names) << '\n';
    }
  }
  return report.passed() ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyCliOptions {
  std::string levels;
  std::size_t arity = 2;
  std::string axioms = "SM,WeakIWA";
  bool prune = true;
  unsigned workers = 1;
  std::string format = "text";
};

std::string rank_table(const RankedRelation& rel) {
  std::string out;
  for (std::size_t i = 0; i < rel.ranks().size(); ++i) {
    out += (i ? ", " : "") + to_string((*rel.domain())[i]) + "=" + std::to_string(rel.ranks()[i]);
  }
  return out;
}

int run_verify(const VerifyCliOptions& opt, std::ostream& out) {
  const GridSpec spec(parse_rationals(opt.levels, "--levels"), opt.arity);
  const auto axioms = parse_axioms(opt.axioms);
  VerifyOptions vo;
  vo.prune = opt.prune;
  vo.workers = opt.workers;
  const auto report = verify_characterization(spec, axioms, vo);
  constexpr std::size_t kListLimit = 10;

  if (opt.format == "json") {
    Json axiom_names = Json::array();
    Json per_axiom = Json::object();
    for (auto id : report.axiom_set) axiom_names.push_back(std::string(to_string(id)));
    for (const auto& [id, count] : report.axiom_pass_counts) per_axiom[std::string(to_string(id))] = count;
    Json survivors = Json::array();
    for (const auto& s : report.survivors) {
      survivors.push_back(Json{{"index", s.index},
                               {"equals_lex", s.equals_lex},
                               {"chain", s.relation.chain()},
                               {"ranks", s.relation.ranks()}});
    }
    Json root = Json::object();
    root["grid"] = report.grid;
    root["points"] = report.points;
    root["axioms"] = axiom_names;
    root["pruned"] = report.pruned;
    root["enumerated"] = report.enumerated;
    root["rejected_by_prune"] = report.rejected_by_prune;
    root["reached"] = report.reached;
    root["counts"] = Json{{"SM", report.count_sm},
                          {"WeakIWA", report.count_weak_iwa},
                          {"SM+WeakIWA", report.count_sm_weak_iwa},
                          {"SM+IWA", report.count_sm_iwa}};
    root["axiom_pass_counts"] = per_axiom;
    root["survivor_count"] = report.survivor_count;
    root["survivors"] = survivors;
    root["lex_survives"] = report.lex_survives;
    root["unique_lex"] = report.unique_lex();
    root["elapsed_ms"] = report.elapsed_ms;
    out << root.dump(2) << '\n';
  } else {
    out << "grid: " << report.grid << " (" << report.points << " points)\n";
    out << "axioms:";
    for (auto id : report.axiom_set) out << ' ' << to_string(id);
    out << '\n';
    out << "pruning: " << (report.pruned ? "strong-monotonicity pairs" : "off") << '\n';
    out << "enumerated: " << report.enumerated << '\n';
    if (report.pruned) out << "rejected by pruning: " << report.rejected_by_prune << '\n';
    out << "checked: " << report.reached << '\n';
    for (const auto& [id, count] : report.axiom_pass_counts) {
      out << "  pass " << to_string(id) << ": " << count << '\n';
    }
    out << "  pass {SM}: " << report.count_sm << '\n';
    out << "  pass {WeakIWA}: " << report.count_weak_iwa << '\n';
    out << "  pass {SM, WeakIWA}: " << report.count_sm_weak_iwa << '\n';
    out << "  pass {SM, IWA}: " << report.count_sm_iwa << '\n';
    out << "survivors: " << report.survivor_count << '\n';
    if (report.survivor_count <= kListLimit) {
      for (const auto& s : report.survivors) {
        out << "  #" << s.index << (s.equals_lex ? " [lex] " : " ") << s.relation.chain() << '\n';
        out << "    ranks: " << rank_table(s.relation) << '\n';
      }
    }
    if (report.unique_lex()) {
      out << report.enumerated << " enumerated, 1 survivor = lex\n";
    } else {
      out << report.enumerated << " enumerated, " << report.survivor_count << " survivors"
          << (report.lex_survives ? " (lex among them)" : " (lex not among them)") << '\n';
    }
    out << "elapsed: " << report.elapsed_ms << " ms\n";
  }
  return report.unique_lex() ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// demo

int run_demo(std::ostream& out) {
  const auto loaded = load_document(example_document());
  const Raf& a = loaded.rafs[0];
  const Raf& b = loaded.rafs[1];
  const auto& labels = loaded.context->labels();
  const auto& payoffs = *loaded.context->payoffs();

  out << "X = {" << labels[0] << ", " << labels[1] << "}, priority x1 = " << labels[0]
      << ", x2 = " << labels[1] << '\n';
  out << "π(" << labels[0] << ") = " << payoffs[0] << ", π(" << labels[1] << ") = " << payoffs[1]
      << '\n';
  out << "A = " << a << "  (A(" << labels[0] << ") = " << a[0] << ", A(" << labels[1]
      << ") = " << a[1] << ")\n";
  out << "B = " << b << "  (B(" << labels[0] << ") = " << b[0] << ", B(" << labels[1]
      << ") = " << b[1] << ")\n\n";

  out << "maximum expected pay-off, u(R) = max_x π(x)·R(x):\n";
  out << "  u(A) = " << mep_utility(a) << '\n';
  out << "  u(B) = " << mep_utility(b) << '\n';
  out << "  mep: " << verdict(utility_compare(a, b, mep_utility), "A", "B") << "\n\n";

  const auto k = *first_difference(a, b);
  out << "lexicographic, first difference at x" << k << " = " << labels[k - 1] << " ("
      << a[k - 1] << " vs " << b[k - 1] << "):\n";
  out << "  lex: " << verdict(lex_compare(a, b), "A", "B") << "\n\n";

  const LexRelation lex;
  const auto trace = proof_trace_check(lex, a, b);
  out << "proof witness C (B up to x" << trace.k << ", A after): C = " << trace.witness << '\n';
  out << "  monotonicity step: " << verdict(trace.c_vs_a, "C", "A")
      << (trace.monotonicity_step ? " (ok)" : " (mismatch)") << '\n';
  out << "  independence step: A vs B gives " << verdict(trace.a_vs_b, "A", "B")
      << ", A vs C gives " << verdict(trace.a_vs_c, "A", "C")
      << (trace.independence_step ? " (ok)" : " (mismatch)") << '\n';
  out << "  conclusion: " << verdict(trace.a_vs_b, "A", "B")
      << (trace.conclusion_step ? " (matches lex)" : " (differs from lex)") << "\n\n";

  out << "note: choosing B under mep can leave only " << labels[1] << " if " << labels[0]
      << " is gone on arrival; this regret argument is discussed informally, not computed.\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank and audit orderings of random availability functions"};
  app.name("lexraf");
  app.require_subcommand(1);

  RankOptions rank_opt;
  auto* rank = app.add_subcommand("rank", "Order the RAFs of a document best to worst");
  rank->add_option("-i,--input", rank_opt.input, "JSON input document")->required();
  rank->add_option("-r,--relation", rank_opt.relation, "lex, mep or wlog");
  rank->add_option("--format", rank_opt.format)->check(CLI::IsMember({"text", "json"}));

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "Audit a relation against the axioms");
  check->add_option("-i,--input", check_opt.input, "JSON input document");
  check->add_option("--grid", check_opt.grid, "comma-separated grid levels, e.g. 0,1/2,1");
  check->add_option("--arity", check_opt.arity, "number of alternatives for --grid");
  check->add_option("-r,--relation", check_opt.relation, "lex, mep or wlog")->required();
  check->add_option("--axioms", check_opt.axioms, "comma-separated axiom names or 'all'");
  check->add_option("--format", check_opt.format)->check(CLI::IsMember({"text", "json"}));
  check->add_option("--payoffs", check_opt.payoffs, "pay-offs for --grid mode (default all 1)");
  check->add_option("--weights", check_opt.weights, "wlog weights for --grid mode (default all 1)");
  check->add_option("--seed", check_opt.seed, "seed for sampled checks");
  check->add_option("--samples", check_opt.samples, "draws per sampled check");
  check->add_flag("--all-violations", check_opt.all_violations, "report every violation");

  VerifyCliOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Enumerate weak orders on a grid and filter by axioms");
  verify->alias("verify-characterization");
  verify->add_option("--levels,--grid", verify_opt.levels, "comma-separated grid levels")->required();
  verify->add_option("--arity", verify_opt.arity, "number of alternatives");
  verify->add_option("--axioms", verify_opt.axioms, "comma-separated axiom names");
  verify->add_flag("--prune,!--no-prune", verify_opt.prune, "strong-monotonicity pruning (default on)");
  verify->add_option("--workers", verify_opt.workers, "worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--format", verify_opt.format)->check(CLI::IsMember({"text", "json"}));

  std::string normalize_input;
  auto* normalize = app.add_subcommand("normalize", "Re-emit a document as canonical JSON");
  normalize->add_option("-i,--input", normalize_input, "JSON input document")->required();

  app.add_subcommand("demo", "Walk through the two-alternative example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*rank) return run_rank(rank_opt, out);
    if (*check) return run_check(check_opt, out);
    if (*verify) return run_verify(verify_opt, out);
    if (*normalize) {
      out << serialize_document(parse_document(read_file(normalize_input))) << '\n';
      return kExitOk;
    }
    return run_demo(out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace lexraf::cli
