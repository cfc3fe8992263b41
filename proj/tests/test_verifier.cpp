#include <doctest.h>

#include <set>

#include "mtlsoft/fixtures.hpp"
#include "mtlsoft/verifier.hpp"
#include "oracles.hpp"

using namespace mtlsoft;

namespace {

FiniteMtlAlgebra fixture(const char* id) { return *fixtures::algebra(id); }

const TheoremSpec& theorem(const char* id) {
  const auto* spec = find_theorem(id);
  REQUIRE(spec != nullptr);
  return *spec;
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto& specs = catalog();
  CHECK(specs.size() == 31);
  std::set<std::string> ids;
  for (const auto& s : specs) ids.insert(s.id);
  CHECK(ids.size() == 31);

  const auto& t33 = theorem("T3.3");
  CHECK(t33.interval == ParameterInterval::make(UnitRational(0, 1), UnitRational(1, 1)));
  CHECK(t33.interval_rule == IntervalRule::Fixed);
  CHECK(t33.direction == Direction::Iff);
  const auto& lhs = std::get<FuzzySide>(t33.lhs);
  CHECK(lhs.family == FuzzyFamily::Kind::Plain);
  CHECK(lhs.kind == FilterKind::Filter);
  CHECK(t33.rhs.soft == SoftKind::In);

  const auto& t4313 = theorem("T4.3.13");
  CHECK(t4313.interval_rule == IntervalRule::Thresholds);
  CHECK(std::get<SoftSide>(t4313.lhs).kinds == std::vector<FilterKind>{FilterKind::Boolean});
  CHECK(t4313.rhs.kinds == std::vector<FilterKind>{FilterKind::MV, FilterKind::G});
  CHECK(theorem("T4.2.13").direction == Direction::ForwardOnly);
  CHECK(theorem("T4.3.12").direction == Direction::ForwardOnly);

  const auto& t3_10 = theorem("T3.10");
  CHECK(t3_10.rhs.soft == SoftKind::Q);
  CHECK(std::get<FuzzySide>(t3_10.lhs).family == FuzzyFamily::Kind::InOrQ);
  CHECK(find_theorem("T9.9") == nullptr);
}

TEST_CASE("default thresholds") {
  CHECK(default_thresholds(Grid(4)) == ParameterInterval::make(UnitRational(1, 4), UnitRational(3, 4)));
  CHECK(default_thresholds(Grid(2)) == ParameterInterval::make(UnitRational(1, 2), UnitRational(1, 1)));
  CHECK(default_thresholds(Grid(10)) == ParameterInterval::make(UnitRational(2, 10), UnitRational(8, 10)));
}

TEST_CASE("exhaustive confirmations") {
  const auto a1 = fixture("a1");
  const auto r = verify(a1, "a1", theorem("T3.3"), Grid(4));
  CHECK(r.checked == 625);
  CHECK_FALSE(r.sampled);
  CHECK(r.confirmed());

  const auto a2 = fixture("a2");
  CHECK(verify(a2, "a2", theorem("T4.2.13"), Grid(4)).confirmed());

  const auto a3 = fixture("a3");
  const auto r3 = verify(a3, "a3", theorem("T4.3.13"), Grid(2));
  CHECK(r3.checked == 729);
  CHECK(r3.confirmed());
}

TEST_CASE("verify-all confirms every theorem on every fixture") {
  for (const auto& id : fixtures::ids()) {
    const auto alg = *fixtures::algebra(id);
    const Grid grid(alg.size() > 4 ? 2 : 4);
    for (const auto& r : verify_all(alg, id, grid)) CHECK_MESSAGE(r.confirmed(), id << " " << r.theorem);
  }
}

TEST_CASE("theorems hold on generated algebras") {
  const std::vector<nlohmann::json> docs = {oracle::lukasiewicz_chain(4), oracle::goedel_chain(4),
                                            oracle::nilpotent_minimum_chain(4),
                                            oracle::product(oracle::lukasiewicz_chain(2), oracle::lukasiewicz_chain(2))};
  for (const auto& doc : docs) {
    const auto alg = load_algebra(doc);
    for (const auto& r : verify_all(alg, "generated", Grid(4))) CHECK_MESSAGE(r.confirmed(), r.theorem);
  }
}

TEST_CASE("thread count does not change the report") {
  const auto a3 = fixture("a3");
  TheoremSpec wrong = theorem("T3.3");
  wrong.rhs.kinds = {FilterKind::Boolean};
  VerifyOptions one;
  VerifyOptions many;
  many.threads = 4;
  const auto r1 = verify(a3, "a3", wrong, Grid(2), one);
  const auto r4 = verify(a3, "a3", wrong, Grid(2), many);
  REQUIRE_FALSE(r1.confirmed());
  REQUIRE(r1.counterexamples.size() == r4.counterexamples.size());
  for (std::size_t i = 0; i < r1.counterexamples.size(); ++i) {
    CHECK(r1.counterexamples[i].index == r4.counterexamples[i].index);
    CHECK(r1.counterexamples[i].mu == r4.counterexamples[i].mu);
    CHECK(r1.counterexamples[i].witness == r4.counterexamples[i].witness);
  }
  CHECK(to_json(a3, r1) == to_json(a3, r4));
}

TEST_CASE("a false statement is refuted") {
  const auto a1 = fixture("a1");
  SUBCASE("filter does not characterize Boolean soft sets") {
    TheoremSpec wrong = theorem("T3.3");
    wrong.rhs.kinds = {FilterKind::Boolean};
    const auto r = verify(a1, "a1", wrong, Grid(4));
    REQUIRE_FALSE(r.confirmed());
    CHECK(r.counterexamples.front().failing_direction == "lhs => rhs");
    CHECK_FALSE(r.counterexamples.front().witness.empty());
  }
  SUBCASE("MV soft sets need not be Boolean") {
    TheoremSpec wrong = theorem("T4.2.13");
    wrong.direction = Direction::Iff;
    const auto r = verify(fixture("a2"), "a2", wrong, Grid(4));
    REQUIRE_FALSE(r.confirmed());
    CHECK(r.counterexamples.front().failing_direction == "rhs => lhs");
  }
}

TEST_CASE("sampled mode") {
  const auto a3 = fixture("a3");
  VerifyOptions options;
  options.budget = 2000;
  options.seed = 11;
  const auto r = verify(a3, "a3", theorem("T4.1.4"), Grid(10), options);
  CHECK(r.sampled);
  CHECK(r.checked == 2000);
  CHECK(r.confirmed());
  const auto again = verify(a3, "a3", theorem("T4.1.4"), Grid(10), options);
  CHECK(to_json(a3, r) == to_json(a3, again));
  const auto j = to_json(a3, r);
  CHECK(j["mode"] == "sampled");
  CHECK(j["status"] == "confirmed");
  CHECK(j["D"] == 10);
}

TEST_CASE("strictness witnesses") {
  const auto a3 = fixture("a3");
  const auto g = find_strictness_witness(a3, "T4.3.12", Grid(2));
  REQUIRE(g.has_value());
  const auto iv = resolve_interval(theorem("T4.3.12"), Grid(2), std::nullopt);
  const auto soft = epsilon_soft(*g, iv);
  CHECK(classify_soft(a3, soft, FilterKind::G).holds);
  CHECK_FALSE(classify_soft(a3, soft, FilterKind::Boolean).holds);

  const auto a2 = fixture("a2");
  const auto mv = find_strictness_witness(a2, "T4.2.13", Grid(4));
  REQUIRE(mv.has_value());
  const auto soft2 = epsilon_soft(*mv, resolve_interval(theorem("T4.2.13"), Grid(4), std::nullopt));
  CHECK(classify_soft(a2, soft2, FilterKind::MV).holds);
  CHECK_FALSE(classify_soft(a2, soft2, FilterKind::Boolean).holds);

  // Every filter of the two-element algebra is Boolean.
  const auto b2 = fixture("b2");
  CHECK_FALSE(find_strictness_witness(b2, "T4.2.13", Grid(4)).has_value());
  CHECK_FALSE(find_strictness_witness(b2, "T4.3.12", Grid(4)).has_value());
  CHECK_THROWS_AS(find_strictness_witness(b2, "T3.3", Grid(4)), std::invalid_argument);
}

TEST_CASE("restricting to sub-intervals keeps the threshold theorems") {
  // Soft sets over a smaller (alpha, beta] are restrictions, so confirmation
  // must hold for every on-grid choice.
  const auto a1 = fixture("a1");
  for (int lo = 1; lo < 4; ++lo) {
    for (int hi = lo + 1; hi <= 4; ++hi) {
      VerifyOptions options;
      options.interval = ParameterInterval::make(UnitRational(lo, 4), UnitRational(hi, 4));
      for (const char* id : {"T3.12", "T4.1.12", "T4.2.12", "T4.3.11", "T4.3.13"}) {
        CHECK_MESSAGE(verify(a1, "a1", theorem(id), Grid(4), options).confirmed(), id << " " << lo << "/" << hi);
      }
    }
  }
}

TEST_CASE("interval errors") {
  const auto a1 = fixture("a1");
  VerifyOptions options;
  options.interval = ParameterInterval::make(UnitRational(1, 4), UnitRational(3, 4));
  CHECK_THROWS_AS(verify(a1, "a1", theorem("T3.3"), Grid(4), options), std::invalid_argument);
  options.interval = ParameterInterval::make(UnitRational(0, 1), UnitRational(3, 4));
  CHECK_THROWS_AS(verify(a1, "a1", theorem("T3.12"), Grid(4), options), std::invalid_argument);
  options.interval = ParameterInterval::make(UnitRational(1, 3), UnitRational(2, 3));
  CHECK_THROWS_AS(verify(a1, "a1", theorem("T3.12"), Grid(4), options), std::invalid_argument);
  options.interval = ParameterInterval::make(UnitRational(0, 1), UnitRational(1, 1));
  CHECK(verify(a1, "a1", theorem("T3.3"), Grid(4), options).confirmed());
}
