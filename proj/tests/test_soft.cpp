#include <doctest.h>

#include <random>

#include "mtlsoft/filters.hpp"
#include "mtlsoft/fixtures.hpp"
#include "mtlsoft/soft.hpp"

using namespace mtlsoft;
using nlohmann::json;

namespace {

FiniteMtlAlgebra fixture(const char* id) { return *fixtures::algebra(id); }

ParameterInterval unit() { return ParameterInterval::make(UnitRational(0, 1), UnitRational(1, 1)); }

}  // namespace

TEST_CASE("in-soft set of a fuzzy filter") {
  const auto a1 = fixture("a1");
  const auto mu = parse_fuzzy_set(a1, Grid(4), "1=1,b=1/2,a=1/2,0=1/4");
  const auto soft = epsilon_soft(mu, unit());
  CHECK(soft.levels().size() == 4);
  CHECK(soft.at(UnitRational(1, 4)).is_full());
  CHECK(soft.at(UnitRational(1, 10)).is_full());
  CHECK(soft.at(UnitRational(3, 10)) == parse_subset(a1, "a,b,1"));
  CHECK(soft.at(UnitRational(1, 2)) == parse_subset(a1, "a,b,1"));
  CHECK(soft.at(UnitRational(51, 100)) == parse_subset(a1, "1"));
  CHECK(soft.at(UnitRational(1, 1)) == parse_subset(a1, "1"));
  CHECK_THROWS_AS(soft.at(UnitRational(0, 1)), std::out_of_range);
  CHECK(classify_soft(a1, soft, FilterKind::Filter).holds);
}

TEST_CASE("q-soft set") {
  const auto a1 = fixture("a1");
  const auto mu = parse_fuzzy_set(a1, Grid(4), "1=1,b=3/4,a=1/2,0=0");
  const auto soft = q_soft(mu, unit());
  CHECK(soft.at(UnitRational(1, 4)) == parse_subset(a1, "1"));
  CHECK(soft.at(UnitRational(1, 2)) == parse_subset(a1, "b,1"));
  CHECK(soft.at(UnitRational(3, 4)) == parse_subset(a1, "a,b,1"));
  CHECK(soft.at(UnitRational(1, 1)) == parse_subset(a1, "a,b,1"));
  CHECK(level_set(mu, SoftKind::Q, UnitRational(1, 1)) == parse_subset(a1, "a,b,1"));
  CHECK(level_set(mu, SoftKind::Q, UnitRational(1, 3)) == parse_subset(a1, "b,1"));
  const auto verdict = classify_soft(a1, soft, FilterKind::Filter);
  CHECK_FALSE(verdict.holds);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->t == UnitRational(1, 2));
}

TEST_CASE("piece fixtures carry their claimed kinds") {
  const std::map<std::string, FilterKind> claims = {
      {"boolean", FilterKind::Boolean}, {"mv", FilterKind::MV}, {"g", FilterKind::G}};
  for (const auto& id : fixtures::soft_ids()) {
    const auto doc = *fixtures::soft_document(id);
    const auto alg = *fixtures::algebra(doc["algebra"].get<std::string>());
    const auto soft = soft_set_from_json(alg, doc);
    const auto claim = claims.at(doc["claim"].get<std::string>());
    CHECK_MESSAGE(classify_soft(alg, soft, claim).holds, id);
    CHECK(classify_soft(alg, soft, FilterKind::Filter).holds);
    if (claim != FilterKind::Boolean) CHECK_FALSE(classify_soft(alg, soft, FilterKind::Boolean).holds);
  }
}

TEST_CASE("a soft set that is a filter but not Boolean reports its level") {
  const auto a1 = fixture("a1");
  const auto mu = parse_fuzzy_set(a1, Grid(4), "1=1,b=3/4,a=3/4,0=1/4");
  const auto soft = epsilon_soft(mu, unit());
  CHECK(classify_soft(a1, soft, FilterKind::Filter).holds);
  const auto verdict = classify_soft(a1, soft, FilterKind::Boolean);
  CHECK_FALSE(verdict.holds);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->t == UnitRational(1, 1));
  CHECK(verdict.witness->level == parse_subset(a1, "1"));
  CHECK_FALSE(verdict.witness->classification.boolean);
  const auto j = to_json(a1, verdict);
  CHECK(j["holds"] == false);
}

TEST_CASE("every t in the interval resolves to its grid representative") {
  const auto a3 = fixture("a3");
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    std::vector<int> levels(6);
    for (auto& l : levels) l = static_cast<int>(rng() % 5);
    const FuzzySet mu(Grid(4), levels);
    for (const SoftKind kind : {SoftKind::In, SoftKind::Q}) {
      const auto soft = make_soft(mu, kind, unit());
      for (int k = 1; k <= 97; ++k) {
        const UnitRational t(k, 97);
        CHECK(soft.at(t) == level_set(mu, kind, t));
      }
    }
  }
}

TEST_CASE("level sets are nested") {
  const auto a3 = fixture("a3");
  const FuzzySet mu(Grid(4), {0, 3, 1, 2, 1, 4});
  for (int i = 1; i <= 4; ++i) {
    for (int j = i; j <= 4; ++j) {
      const UnitRational s(i, 4), t(j, 4);
      CHECK(level_set(mu, SoftKind::In, t).subset_of(level_set(mu, SoftKind::In, s)));
      CHECK(level_set(mu, SoftKind::Q, s).subset_of(level_set(mu, SoftKind::Q, t)));
    }
  }
  // x q t iff mu(x) > 1 - t iff x belongs to the in-level just above 1 - t.
  for (int k = 1; k <= 4; ++k) {
    for (Element x = 0; x < 6; ++x) {
      CHECK(level_set(mu, SoftKind::Q, UnitRational(k, 4)).contains(x) == (mu.level(x) > 4 - k));
    }
  }
}

TEST_CASE("tiling") {
  const auto iv = unit();
  const auto r = [](int a, int b, int d) { return ParameterInterval::make(UnitRational(a, d), UnitRational(b, d)); };
  CHECK_NOTHROW(validate_tiling(iv, {r(0, 2, 5), r(2, 4, 5), r(4, 5, 5)}));
  CHECK_NOTHROW(validate_tiling(iv, {r(4, 5, 5), r(0, 2, 5), r(2, 4, 5)}));
  CHECK_THROWS_AS(validate_tiling(iv, {r(0, 2, 5), r(3, 5, 5)}), IncompleteSoftSet);
  CHECK_THROWS_AS(validate_tiling(iv, {r(0, 3, 5), r(2, 5, 5)}), IncompleteSoftSet);
  CHECK_THROWS_AS(validate_tiling(iv, {r(0, 2, 5), r(2, 4, 5)}), IncompleteSoftSet);
  CHECK_THROWS_AS(validate_tiling(iv, {r(1, 5, 5)}), IncompleteSoftSet);
}

TEST_CASE("piece documents") {
  const auto a1 = fixture("a1");
  auto doc = *fixtures::soft_document("s1");
  SUBCASE("well formed") {
    const auto soft = soft_set_from_json(a1, doc);
    CHECK(soft.kind() == SoftKind::Explicit);
    CHECK(soft.at(UnitRational(1, 2)) == parse_subset(a1, "a,b,1"));
    CHECK(soft.at(UnitRational(9, 10)).is_empty());
    CHECK(soft.at(UnitRational(2, 5)).is_full());
  }
  SUBCASE("gap") {
    doc["pieces"][1]["range"] = json::array({"1/2", "4/5"});
    CHECK_THROWS_AS(soft_set_from_json(a1, doc), IncompleteSoftSet);
  }
  SUBCASE("off-grid boundary") {
    doc["pieces"][0]["range"] = json::array({"0", "1/3"});
    doc["pieces"][1]["range"] = json::array({"1/3", "4/5"});
    CHECK_THROWS_AS(soft_set_from_json(a1, doc), std::invalid_argument);
  }
}

TEST_CASE("parameter intervals") {
  CHECK(ParameterInterval::parse("(1/4,3/4]") == ParameterInterval::make(UnitRational(1, 4), UnitRational(3, 4)));
  CHECK(ParameterInterval::parse("0,1/2") == ParameterInterval::make(UnitRational(0, 1), UnitRational(1, 2)));
  CHECK(ParameterInterval::parse("(0,1]").str() == "(0,1]");
  CHECK_THROWS_AS(ParameterInterval::make(UnitRational(1, 2), UnitRational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(ParameterInterval::parse("1/2"), std::invalid_argument);
  const auto mu = FuzzySet::constant(4, Grid(4), 1);
  CHECK_THROWS_AS(epsilon_soft(mu, ParameterInterval::make(UnitRational(1, 3), UnitRational(1, 1))),
                  std::invalid_argument);
}

TEST_CASE("soft json") {
  const auto a1 = fixture("a1");
  const auto mu = parse_fuzzy_set(a1, Grid(2), "0=0,a=0,1=1,b=1/2");
  const auto j = to_json(a1, epsilon_soft(mu, unit()));
  CHECK(j["kind"] == "in");
  CHECK(j["grid"] == 2);
  CHECK(j["levels"] == json::array({json::array({"1/2", {"b", "1"}}), json::array({"1", {"1"}})}));
}
