#include "mtlsoft/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtlsoft/fixtures.hpp"
#include "mtlsoft/verifier.hpp"

namespace mtlsoft::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string target;
  int grid = 0;  // 0: pick from carrier size
  std::string interval;
  std::string family = "plain";
  std::string kind;
  std::string route = "default";
  std::string soft = "in";
  std::string subset;
  std::string mu;
  std::string mu_file;
  std::string theorem;
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool classify = false;
  bool as_json = false;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

struct Target {
  std::string id;
  FiniteMtlAlgebra algebra;
};

Target load_target(const std::string& target) {
  if (auto alg = fixtures::algebra(target)) return {target, std::move(*alg)};
  if (target.find('/') == std::string::npos && target.find('.') == std::string::npos) {
    throw UsageError("unknown fixture '" + target + "' (fixtures: a1 a2 a3 b2)");
  }
  try {
    return {target, load_algebra(read_json_file(target))};
  } catch (const AlgebraLoadError& e) {
    throw UsageError("cannot load '" + target + "': " + e.what());
  }
}

Grid grid_for(const Options& o, const FiniteMtlAlgebra& alg) {
  if (o.grid != 0) return Grid(o.grid);
  return Grid(alg.size() <= 4 ? 4 : 2);
}

std::uint64_t budget_for(const Options& o) {
  if (o.budget != 0) return o.budget;
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string(kBudgetEnv) + " must be a positive integer");
    }
  }
  return kDefaultBudget;
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.budget = budget_for(o);
  v.seed = o.seed;
  v.threads = o.threads != 0 ? o.threads : std::max(1U, std::thread::hardware_concurrency());
  if (!o.interval.empty()) v.interval = ParameterInterval::parse(o.interval);
  return v;
}

FilterKind kind_for(const Options& o, FilterKind fallback = FilterKind::Filter) {
  if (o.kind.empty()) return fallback;
  if (auto k = parse_filter_kind(o.kind)) return *k;
  throw UsageError("unknown kind '" + o.kind + "' (filter|boolean|mv|g)");
}

FuzzySet fuzzy_for(const Options& o, const FiniteMtlAlgebra& alg) {
  if (!o.mu_file.empty()) return fuzzy_set_from_json(alg, read_json_file(o.mu_file));
  if (o.mu.empty()) throw UsageError("a fuzzy set is required (--mu or --mu-file)");
  return parse_fuzzy_set(alg, grid_for(o, alg), o.mu);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string witness_text(const FiniteMtlAlgebra& alg, const FilterClassification& c) {
  std::string out;
  for (const auto& w : c.witnesses) {
    out += "  " + std::string(to_string(w.property)) + " fails at (";
    for (std::size_t i = 0; i < w.elements.size(); ++i) out += (i ? ", " : "") + alg.label(w.elements[i]);
    out += ")";
  }
  return out;
}

// --------------------------------------------------------------------------

int cmd_check_algebra(const Options& o, std::ostream& out) {
  const Target t = load_target(o.target);
  const AxiomReport axioms = validate_mtl(t.algebra);
  const AxiomReport laws = check_derived_laws(t.algebra);
  const bool ok = axioms.ok() && laws.ok();
  if (o.as_json) {
    out << json{{"algebra", t.id},
                {"size", t.algebra.size()},
                {"ok", ok},
                {"axioms", to_json(t.algebra, axioms)},
                {"derived_laws", to_json(t.algebra, laws)}}
               .dump(2)
        << '\n';
    return ok ? kOk : kFailed;
  }
  out << "algebra " << t.id << " (" << t.algebra.size() << " elements)\n";
  for (const auto* report : {&axioms, &laws}) {
    for (const auto& a : report->axioms) {
      out << "  [" << (a.passed ? "pass" : "FAIL") << "] " << std::left << std::setw(13) << a.id << a.description;
      if (!a.passed) out << "  (" << report->count(a.id) << " violations)";
      out << '\n';
    }
  }
  for (const auto* report : {&axioms, &laws}) {
    std::size_t shown = 0;
    for (const auto& v : report->violations) {
      if (shown++ == 10) {
        out << "  ...\n";
        break;
      }
      out << "  violation " << v.axiom << " at (";
      for (std::size_t i = 0; i < v.elements.size(); ++i) out << (i ? ", " : "") << t.algebra.label(v.elements[i]);
      out << ")\n";
    }
  }
  out << (ok ? "MTL-algebra: all axioms and derived laws hold\n" : "not an MTL-algebra\n");
  return ok ? kOk : kFailed;
}

int cmd_filters(const Options& o, std::ostream& out) {
  const Target t = load_target(o.target);
  const auto filters = enumerate_filters(t.algebra);
  const DecompositionReport decomposition = crisp_decomposition_check(t.algebra);
  if (o.as_json) {
    json list = json::array();
    for (const auto& f : filters) {
      json entry{{"subset", to_json(t.algebra, f)}};
      if (o.classify) entry["classification"] = to_json(t.algebra, classify_filter(t.algebra, f));
      list.push_back(std::move(entry));
    }
    out << json{{"algebra", t.id}, {"filters", list}, {"decomposition", to_json(t.algebra, decomposition)}}.dump(2)
        << '\n';
    return decomposition.ok() ? kOk : kFailed;
  }
  out << filters.size() << " filters of " << t.id << '\n';
  for (const auto& f : filters) {
    out << "  " << std::left << std::setw(22) << format(t.algebra, f);
    if (o.classify) {
      const auto c = classify_filter(t.algebra, f);
      out << "boolean=" << std::setw(4) << yes_no(c.boolean) << "g=" << std::setw(4) << yes_no(c.g)
          << "mv=" << yes_no(c.mv);
    }
    out << '\n';
  }
  if (o.classify) {
    out << "boolean <=> (g and mv): " << decomposition.counterexamples.size() << " counterexamples over "
        << decomposition.filters_checked << " filters\n";
  }
  return decomposition.ok() ? kOk : kFailed;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Target t = load_target(o.target);
  if (o.subset.empty()) throw UsageError("classify needs --subset");
  const CrispSubset s = parse_subset(t.algebra, o.subset);
  const auto c = s.is_empty() ? FilterClassification{} : classify_filter(t.algebra, s);
  if (o.as_json) {
    out << json{{"algebra", t.id}, {"subset", to_json(t.algebra, s)}, {"classification", to_json(t.algebra, c)}}.dump(2)
        << '\n';
    return kOk;
  }
  out << format(t.algebra, s) << ": filter=" << yes_no(c.is_filter) << " boolean=" << yes_no(c.boolean)
      << " g=" << yes_no(c.g) << " mv=" << yes_no(c.mv) << '\n';
  if (!c.witnesses.empty()) out << witness_text(t.algebra, c) << '\n';
  return kOk;
}

FuzzyFamily family_for(const Options& o) {
  const auto kind = parse_family_kind(o.family);
  if (!kind) throw UsageError("unknown family '" + o.family + "' (plain|eiq|bar|thresholds)");
  switch (*kind) {
    case FuzzyFamily::Kind::Plain: return FuzzyFamily::plain();
    case FuzzyFamily::Kind::InOrQ: return FuzzyFamily::in_or_q();
    case FuzzyFamily::Kind::Bar: return FuzzyFamily::bar();
    case FuzzyFamily::Kind::Thresholds: {
      if (o.interval.empty()) throw UsageError("family thresholds needs --interval alpha,beta");
      const auto iv = ParameterInterval::parse(o.interval);
      return FuzzyFamily::thresholds(iv.lo, iv.hi);
    }
  }
  return {};
}

int cmd_fuzzy_check(const Options& o, std::ostream& out) {
  const Target t = load_target(o.target);
  const FuzzySet mu = fuzzy_for(o, t.algebra);
  const FuzzyFamily family = family_for(o);
  const FilterKind kind = kind_for(o);
  const auto route = parse_route(o.route);
  if (!route) throw UsageError("unknown route '" + o.route + "'");
  const bool holds = check_fuzzy(t.algebra, mu, family, kind, *route);
  if (o.as_json) {
    out << json{{"algebra", t.id},
                {"mu", to_json(t.algebra, mu)},
                {"family", family.name()},
                {"kind", to_string(kind)},
                {"route", to_string(*route)},
                {"holds", holds}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << format(t.algebra, mu) << " is " << (holds ? "" : "not ") << family.name() << ' ' << to_string(kind) << '\n';
  return kOk;
}

int cmd_soft_build(const Options& o, std::ostream& out) {
  const Target t = load_target(o.target);
  const FuzzySet mu = fuzzy_for(o, t.algebra);
  SoftKind soft_kind;
  if (o.soft == "in") {
    soft_kind = SoftKind::In;
  } else if (o.soft == "q") {
    soft_kind = SoftKind::Q;
  } else {
    throw UsageError("--soft must be in or q");
  }
  const ParameterInterval iv = o.interval.empty() ? ParameterInterval{{0, 1}, {1, 1}} : ParameterInterval::parse(o.interval);
  const SoftSet soft = make_soft(mu, soft_kind, iv);
  std::vector<FilterKind> kinds;
  if (o.kind.empty()) {
    kinds = {FilterKind::Filter, FilterKind::Boolean, FilterKind::MV, FilterKind::G};
  } else {
    kinds = {kind_for(o)};
  }
  if (o.as_json) {
    json verdicts = json::object();
    for (FilterKind k : kinds) verdicts[std::string(to_string(k))] = to_json(t.algebra, classify_soft(t.algebra, soft, k));
    out << json{{"algebra", t.id}, {"soft_set", to_json(t.algebra, soft)}, {"classification", verdicts}}.dump(2)
        << '\n';
    return kOk;
  }
  out << to_string(soft_kind) << "-soft set of " << format(t.algebra, mu) << " over " << iv.str() << '\n';
  for (const auto& [th, level] : soft.levels()) out << "  t=" << std::left << std::setw(6) << th.str() << format(t.algebra, level) << '\n';
  for (FilterKind k : kinds) {
    const auto v = classify_soft(t.algebra, soft, k);
    out << "  " << std::setw(8) << to_string(k) << (v.holds ? "filteristic" : "not filteristic");
    if (v.witness) out << " (fails at t=" << v.witness->t.str() << ')';
    out << '\n';
  }
  return kOk;
}

void print_report_line(std::ostream& out, const VerificationReport& r) {
  out << std::left << std::setw(9) << r.theorem << std::setw(17)
      << (r.confirmed() ? "confirmed" : std::to_string(r.counterexamples.size()) + " counterex.") << std::setw(12)
      << (r.sampled ? "sampled" : "exhaustive") << std::setw(10) << r.checked << r.interval.str() << '\n';
}

int cmd_verify(const Options& o, std::ostream& out, bool all) {
  const Target t = load_target(o.target);
  const Grid grid = grid_for(o, t.algebra);
  const VerifyOptions vo = verify_options(o);
  std::vector<VerificationReport> reports;
  if (all) {
    reports = verify_all(t.algebra, t.id, grid, vo);
  } else {
    if (o.theorem.empty()) throw UsageError("verify needs --theorem (see verify-all for the list)");
    const TheoremSpec* spec = find_theorem(o.theorem);
    if (!spec) throw UsageError("unknown theorem '" + o.theorem + "'");
    reports.push_back(verify(t.algebra, t.id, *spec, grid, vo));
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.confirmed(); });
  if (o.as_json) {
    json list = json::array();
    for (const auto& r : reports) list.push_back(to_json(t.algebra, r));
    out << (all ? json{{"algebra", t.id}, {"D", grid.denominator()}, {"ok", ok}, {"reports", list}} : list[0]).dump(2)
        << '\n';
    return ok ? kOk : kFailed;
  }
  out << "algebra " << t.id << ", D=" << grid.denominator() << '\n';
  for (const auto& r : reports) {
    print_report_line(out, r);
    std::size_t shown = 0;
    for (const auto& ce : r.counterexamples) {
      if (shown++ == 5) break;
      out << "    mu=" << format(t.algebra, ce.mu) << "  " << ce.failing_direction << " fails: " << ce.witness << '\n';
    }
  }
  const auto confirmed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.confirmed(); });
  out << confirmed << '/' << reports.size() << " confirmed\n";
  return ok ? kOk : kFailed;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const Target t = load_target(o.target);
  if (o.theorem.empty()) throw UsageError("witness needs --theorem T4.2.13 or T4.3.12");
  const Grid grid = grid_for(o, t.algebra);
  const VerifyOptions vo = verify_options(o);
  const auto mu = find_strictness_witness(t.algebra, o.theorem, grid, vo);
  if (o.as_json) {
    json doc{{"algebra", t.id}, {"theorem", o.theorem}, {"D", grid.denominator()}, {"found", mu.has_value()}};
    if (mu) {
      doc["mu"] = to_json(t.algebra, *mu);
      const auto iv = resolve_interval(*find_theorem(o.theorem), grid, vo.interval);
      doc["soft_set"] = to_json(t.algebra, epsilon_soft(*mu, iv));
    }
    out << doc.dump(2) << '\n';
    return kOk;
  }
  if (!mu) {
    out << "no witness at D=" << grid.denominator() << '\n';
    return kOk;
  }
  out << "witness mu=" << format(t.algebra, *mu) << '\n';
  const auto iv = resolve_interval(*find_theorem(o.theorem), grid, vo.interval);
  const SoftSet soft = epsilon_soft(*mu, iv);
  for (const auto& [th, level] : soft.levels()) {
    out << "  t=" << std::left << std::setw(6) << th.str() << format(t.algebra, level) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-model workbench for MTL-algebras, fuzzy filters and soft sets", "mtlsoft"};
  app.require_subcommand(1);
  Options o;

  auto target = [&](CLI::App* sub) {
    sub->add_option("target", o.target, "fixture id (a1 a2 a3 b2) or algebra JSON file")->required();
    sub->add_flag("--json", o.as_json, "structured output");
  };
  auto search = [&](CLI::App* sub) {
    sub->add_option("--grid", o.grid, "grid denominator D (even)");
    sub->add_option("--budget", o.budget, std::string("max fuzzy sets to enumerate (env ") + kBudgetEnv + ")");
    sub->add_option("--seed", o.seed, "seed for sampled runs");
    sub->add_option("--threads", o.threads, "worker threads (default: all cores)");
    sub->add_option("--interval", o.interval, "lo,hi for (alpha,beta] theorems");
  };
  auto fuzzy = [&](CLI::App* sub) {
    sub->add_option("--mu", o.mu, "fuzzy set, e.g. 1=9/10,b=3/5,a=3/5,0=3/10");
    sub->add_option("--mu-file", o.mu_file, "fuzzy set JSON document");
    sub->add_option("--grid", o.grid, "grid denominator D (even)");
  };

  auto* check = app.add_subcommand("check-algebra", "validate the MTL axioms and derived laws");
  target(check);
  auto* filters = app.add_subcommand("filters", "enumerate filters");
  target(filters);
  filters->add_flag("--classify", o.classify, "mark Boolean, G and MV filters");
  auto* classify = app.add_subcommand("classify", "classify one subset");
  target(classify);
  classify->add_option("--subset", o.subset, "comma-separated labels")->required();
  auto* fcheck = app.add_subcommand("fuzzy-check", "decide a fuzzy filter variant");
  target(fcheck);
  fuzzy(fcheck);
  fcheck->add_option("--family", o.family, "plain|eiq|bar|thresholds");
  fcheck->add_option("--kind", o.kind, "filter|boolean|mv|g");
  fcheck->add_option("--route", o.route, "default|f1f2|f3f4|def|ii|iii|all");
  fcheck->add_option("--interval", o.interval, "alpha,beta for the thresholds family");
  auto* soft = app.add_subcommand("soft-build", "build and classify an in- or q-soft set");
  target(soft);
  fuzzy(soft);
  soft->add_option("--soft", o.soft, "in|q");
  soft->add_option("--interval", o.interval, "lo,hi (default 0,1)");
  soft->add_option("--kind", o.kind, "classify for one kind only");
  auto* ver = app.add_subcommand("verify", "check one theorem");
  target(ver);
  search(ver);
  ver->add_option("--theorem", o.theorem, "theorem id, e.g. T3.3")->required();
  auto* ver_all = app.add_subcommand("verify-all", "check every theorem in the catalog");
  target(ver_all);
  search(ver_all);
  auto* wit = app.add_subcommand("witness", "search a strictness witness");
  target(wit);
  search(wit);
  wit->add_option("--theorem", o.theorem, "T4.2.13 or T4.3.12")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check_algebra(o, out);
    if (filters->parsed()) return cmd_filters(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (fcheck->parsed()) return cmd_fuzzy_check(o, out);
    if (soft->parsed()) return cmd_soft_build(o, out);
    if (ver->parsed()) return cmd_verify(o, out, false);
    if (ver_all->parsed()) return cmd_verify(o, out, true);
    if (wit->parsed()) return cmd_witness(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CarrierTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace mtlsoft::cli
