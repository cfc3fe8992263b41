#include "mtlsoft/verifier.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <thread>

namespace mtlsoft {

using nlohmann::json;

namespace {

ParameterInterval interval(std::int64_t lo_num, std::int64_t lo_den, std::int64_t hi_num, std::int64_t hi_den) {
  return ParameterInterval::make({lo_num, lo_den}, {hi_num, hi_den});
}

std::string kind_phrase(FilterKind kind) {
  switch (kind) {
    case FilterKind::Filter: return "filteristic";
    case FilterKind::Boolean: return "Boolean filteristic";
    case FilterKind::MV: return "MV-filteristic";
    case FilterKind::G: return "G-filteristic";
  }
  return "";
}

std::string fuzzy_phrase(FuzzyFamily::Kind family, FilterKind kind) {
  std::string noun = kind == FilterKind::Filter    ? "filter"
                     : kind == FilterKind::Boolean ? "Boolean filter"
                     : kind == FilterKind::MV      ? "MV-filter"
                                                   : "G-filter";
  switch (family) {
    case FuzzyFamily::Kind::Plain: return "a fuzzy " + noun;
    case FuzzyFamily::Kind::InOrQ: return "an (in, in-or-q)-fuzzy " + noun;
    case FuzzyFamily::Kind::Bar: return "an (in-bar, in-bar-or-q-bar)-fuzzy " + noun;
    case FuzzyFamily::Kind::Thresholds: return "a fuzzy " + noun + " with thresholds (alpha,beta]";
  }
  return noun;
}

std::vector<TheoremSpec> build_catalog() {
  struct Row {
    SoftKind soft;
    IntervalRule rule;
    ParameterInterval interval;
    FuzzyFamily::Kind family;
  };
  const ParameterInterval unit = interval(0, 1, 1, 1);
  const ParameterInterval lower = interval(0, 1, 1, 2);
  const ParameterInterval upper = interval(1, 2, 1, 1);
  const std::vector<Row> rows = {
      {SoftKind::In, IntervalRule::Fixed, unit, FuzzyFamily::Kind::Plain},
      {SoftKind::Q, IntervalRule::Fixed, unit, FuzzyFamily::Kind::Plain},
      {SoftKind::In, IntervalRule::Fixed, lower, FuzzyFamily::Kind::InOrQ},
      {SoftKind::In, IntervalRule::Fixed, upper, FuzzyFamily::Kind::Bar},
      {SoftKind::Q, IntervalRule::Fixed, lower, FuzzyFamily::Kind::Bar},
      {SoftKind::Q, IntervalRule::Fixed, upper, FuzzyFamily::Kind::InOrQ},
      {SoftKind::In, IntervalRule::Thresholds, unit, FuzzyFamily::Kind::Thresholds},
  };
  const std::vector<std::pair<FilterKind, std::vector<std::string>>> groups = {
      {FilterKind::Filter, {"T3.3", "T3.4", "T3.6", "T3.8", "T3.9", "T3.10", "T3.12"}},
      {FilterKind::Boolean, {"T4.1.4", "T4.1.5", "T4.1.7", "T4.1.9", "T4.1.10", "T4.1.11", "T4.1.12"}},
      {FilterKind::MV, {"T4.2.4", "T4.2.5", "T4.2.7", "T4.2.9", "T4.2.10", "T4.2.11", "T4.2.12"}},
      {FilterKind::G, {"T4.3.3", "T4.3.4", "T4.3.6", "T4.3.8", "T4.3.9", "T4.3.10", "T4.3.11"}},
  };

  std::vector<TheoremSpec> out;
  for (const auto& [kind, ids] : groups) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      TheoremSpec spec;
      spec.id = ids[i];
      spec.interval_rule = r.rule;
      spec.interval = r.interval;
      spec.lhs = FuzzySide{r.family, kind};
      spec.rhs = SoftSide{r.soft, {kind}};
      spec.direction = Direction::Iff;
      const std::string where = r.rule == IntervalRule::Fixed ? r.interval.str() : "(alpha,beta]";
      spec.statement = "mu is " + fuzzy_phrase(r.family, kind) + " iff the " +
                       (r.soft == SoftKind::In ? "in" : "q") + "-soft set over " + where + " is " + kind_phrase(kind);
      out.push_back(std::move(spec));
    }
    if (kind == FilterKind::MV) {
      out.push_back({"T4.2.13", "Boolean filteristic in-soft set over (alpha,beta] is MV-filteristic",
                     IntervalRule::Thresholds, unit, SoftSide{SoftKind::In, {FilterKind::Boolean}},
                     SoftSide{SoftKind::In, {FilterKind::MV}}, Direction::ForwardOnly});
    }
  }
  out.push_back({"T4.3.12", "Boolean filteristic in-soft set over (alpha,beta] is G-filteristic",
                 IntervalRule::Thresholds, unit, SoftSide{SoftKind::In, {FilterKind::Boolean}},
                 SoftSide{SoftKind::In, {FilterKind::G}}, Direction::ForwardOnly});
  out.push_back({"T4.3.13", "in-soft set over (alpha,beta] is Boolean filteristic iff it is MV- and G-filteristic",
                 IntervalRule::Thresholds, unit, SoftSide{SoftKind::In, {FilterKind::Boolean}},
                 SoftSide{SoftKind::In, {FilterKind::MV, FilterKind::G}}, Direction::Iff});
  return out;
}

std::string describe_soft_failure(const FiniteMtlAlgebra& alg, const SoftVerdict& v) {
  if (!v.witness) return "";
  std::string out = "level t=" + v.witness->t.str() + " is " + format(alg, v.witness->level);
  const auto& c = v.witness->classification;
  if (!c.is_filter) return out + ", not a filter";
  for (const auto& w : c.witnesses) {
    out += ", not " + std::string(to_string(w.property)) + " at (";
    for (std::size_t i = 0; i < w.elements.size(); ++i) out += (i ? ", " : "") + alg.label(w.elements[i]);
    out += ")";
  }
  return out;
}

struct Evaluation {
  bool lhs;
  bool rhs;
  SoftVerdict lhs_soft;
  SoftVerdict rhs_soft;
};

class TheoremCheck {
 public:
  TheoremCheck(const FiniteMtlAlgebra& alg, const TheoremSpec& spec, ParameterInterval interval)
      : alg_(alg), spec_(spec), interval_(interval) {}

  Evaluation evaluate(const FuzzySet& mu) const {
    Evaluation e{};
    if (const auto* fuzzy = std::get_if<FuzzySide>(&spec_.lhs)) {
      e.lhs = check_fuzzy(alg_, mu, family(fuzzy->family), fuzzy->kind, fuzzy->route);
    } else {
      const auto& soft = std::get<SoftSide>(spec_.lhs);
      e.lhs_soft = classify_soft(alg_, make_soft(mu, soft.soft, interval_), soft.kinds);
      e.lhs = e.lhs_soft.holds;
    }
    e.rhs_soft = classify_soft(alg_, make_soft(mu, spec_.rhs.soft, interval_), spec_.rhs.kinds);
    e.rhs = e.rhs_soft.holds;
    return e;
  }

  std::optional<Counterexample> check(std::uint64_t index, const FuzzySet& mu) const {
    const Evaluation e = evaluate(mu);
    if (e.lhs && !e.rhs) return Counterexample{index, mu, "lhs => rhs", describe_soft_failure(alg_, e.rhs_soft)};
    if (spec_.direction == Direction::Iff && !e.lhs && e.rhs) {
      std::string witness = std::holds_alternative<FuzzySide>(spec_.lhs) ? "fuzzy predicate fails"
                                                                          : describe_soft_failure(alg_, e.lhs_soft);
      return Counterexample{index, mu, "rhs => lhs", witness};
    }
    return std::nullopt;
  }

 private:
  FuzzyFamily family(FuzzyFamily::Kind kind) const {
    switch (kind) {
      case FuzzyFamily::Kind::Plain: return FuzzyFamily::plain();
      case FuzzyFamily::Kind::InOrQ: return FuzzyFamily::in_or_q();
      case FuzzyFamily::Kind::Bar: return FuzzyFamily::bar();
      case FuzzyFamily::Kind::Thresholds: return FuzzyFamily::thresholds(interval_.lo, interval_.hi);
    }
    return {};
  }

  const FiniteMtlAlgebra& alg_;
  const TheoremSpec& spec_;
  ParameterInterval interval_;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// The fuzzy sets a run visits: the whole space, or a seeded sample of it.
// Sample i depends only on (seed, i), so ranges can be split across threads.
class Stream {
 public:
  Stream(std::size_t n, Grid grid, const VerifyOptions& options) : n_(n), grid_(grid), seed_(options.seed) {
    const std::uint64_t total = FuzzySetSpace::count(n, grid);
    sampled_ = total > options.budget;
    size_ = sampled_ ? options.budget : total;
    if (!sampled_) space_.emplace(n, grid, options.budget);
  }

  bool sampled() const { return sampled_; }
  std::uint64_t size() const { return size_; }

  FuzzySet at(std::uint64_t i) const {
    if (!sampled_) return space_->at(i);
    std::mt19937_64 rng(splitmix64(seed_ ^ splitmix64(i)));
    std::uniform_int_distribution<int> level(0, grid_.denominator());
    std::vector<int> levels(n_);
    for (auto& l : levels) l = level(rng);
    return {grid_, std::move(levels)};
  }

 private:
  std::size_t n_;
  Grid grid_;
  std::uint64_t seed_;
  bool sampled_ = false;
  std::uint64_t size_ = 0;
  std::optional<FuzzySetSpace> space_;
};

template <class Visit>
void run_partitioned(std::uint64_t size, unsigned threads, Visit visit) {
  threads = std::max(1U, threads);
  if (threads == 1 || size < 2 * threads) {
    for (std::uint64_t i = 0; i < size; ++i) visit(i);
    return;
  }
  std::vector<std::jthread> workers;
  const std::uint64_t chunk = (size + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(size, begin + chunk);
    workers.emplace_back([begin, end, &visit] {
      for (std::uint64_t i = begin; i < end; ++i) visit(i);
    });
  }
}

}  // namespace

const std::vector<TheoremSpec>& catalog() {
  static const std::vector<TheoremSpec> specs = build_catalog();
  return specs;
}

const TheoremSpec* find_theorem(std::string_view id) {
  for (const auto& s : catalog()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

ParameterInterval default_thresholds(const Grid& grid) {
  const int d = grid.denominator();
  return ParameterInterval::make(grid.point(std::max(1, d / 4)), grid.point(d - d / 4));
}

ParameterInterval resolve_interval(const TheoremSpec& spec, const Grid& grid,
                                   const std::optional<ParameterInterval>& override_interval) {
  if (spec.interval_rule == IntervalRule::Fixed) {
    if (override_interval && *override_interval != spec.interval) {
      throw std::invalid_argument(spec.id + " is stated for " + spec.interval.str() + " only");
    }
    return spec.interval;
  }
  const ParameterInterval chosen = override_interval.value_or(default_thresholds(grid));
  if (!(UnitRational(0, 1) < chosen.lo)) throw std::invalid_argument(spec.id + " needs 0 < alpha");
  return chosen;
}

VerificationReport verify(const FiniteMtlAlgebra& alg, std::string_view algebra_id, const TheoremSpec& spec, Grid grid,
                          const VerifyOptions& options) {
  const ParameterInterval iv = resolve_interval(spec, grid, options.interval);
  if (!iv.on_grid(grid)) {
    throw std::invalid_argument("interval " + iv.str() + " is off the 1/" + std::to_string(grid.denominator()) + " grid");
  }
  const Stream stream(alg.size(), grid, options);
  const TheoremCheck check(alg, spec, iv);

  VerificationReport report;
  report.theorem = spec.id;
  report.algebra = std::string(algebra_id);
  report.grid = grid.denominator();
  report.interval = iv;
  report.checked = stream.size();
  report.sampled = stream.sampled();

  std::mutex mutex;
  run_partitioned(stream.size(), options.threads, [&](std::uint64_t i) {
    if (auto ce = check.check(i, stream.at(i))) {
      const std::lock_guard lock(mutex);
      report.counterexamples.push_back(std::move(*ce));
    }
  });
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) { return a.index < b.index; });
  return report;
}

std::vector<VerificationReport> verify_all(const FiniteMtlAlgebra& alg, std::string_view algebra_id, Grid grid,
                                           const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  for (const auto& spec : catalog()) {
    VerifyOptions per_theorem = options;
    if (spec.interval_rule == IntervalRule::Fixed) per_theorem.interval.reset();
    out.push_back(verify(alg, algebra_id, spec, grid, per_theorem));
  }
  return out;
}

std::optional<FuzzySet> find_strictness_witness(const FiniteMtlAlgebra& alg, std::string_view theorem_id, Grid grid,
                                                const VerifyOptions& options) {
  FilterKind weaker;
  if (theorem_id == "T4.2.13") {
    weaker = FilterKind::MV;
  } else if (theorem_id == "T4.3.12") {
    weaker = FilterKind::G;
  } else {
    throw std::invalid_argument("strictness witnesses exist for T4.2.13 and T4.3.12 only");
  }
  const ParameterInterval iv = resolve_interval(*find_theorem(theorem_id), grid, options.interval);
  const Stream stream(alg.size(), grid, options);
  for (std::uint64_t i = 0; i < stream.size(); ++i) {
    FuzzySet mu = stream.at(i);
    const SoftSet soft = epsilon_soft(mu, iv);
    if (classify_soft(alg, soft, weaker).holds && !classify_soft(alg, soft, FilterKind::Boolean).holds) return mu;
  }
  return std::nullopt;
}

json to_json(const FiniteMtlAlgebra& alg, const VerificationReport& report) {
  json ces = json::array();
  for (const auto& ce : report.counterexamples) {
    ces.push_back({{"index", ce.index},
                   {"mu", to_json(alg, ce.mu)["values"]},
                   {"direction", ce.failing_direction},
                   {"witness", ce.witness}});
  }
  return json{{"theorem", report.theorem},
              {"algebra", report.algebra},
              {"D", report.grid},
              {"interval", json::array({report.interval.lo.str(), report.interval.hi.str()})},
              {"checked", report.checked},
              {"mode", report.sampled ? "sampled" : "exhaustive"},
              {"status", report.confirmed() ? "confirmed" : "counterexamples"},
              {"counterexamples", std::move(ces)}};
}

}  // namespace mtlsoft
