#include "mtlsoft/fixtures.hpp"

namespace mtlsoft::fixtures {

namespace {

using nlohmann::json;

json a1() {
  return json::parse(R"({
    "labels": ["0", "a", "b", "1"],
    "prod": [["0", "0", "0", "0"],
             ["0", "a", "a", "a"],
             ["0", "a", "a", "b"],
             ["0", "a", "b", "1"]],
    "res":  [["1", "1", "1", "1"],
             ["0", "1", "1", "1"],
             ["0", "b", "1", "1"],
             ["0", "a", "b", "1"]],
    "meet": [["0", "0", "0", "0"],
             ["0", "a", "a", "a"],
             ["0", "a", "b", "b"],
             ["0", "a", "b", "1"]],
    "join": [["0", "a", "b", "1"],
             ["a", "a", "b", "1"],
             ["b", "b", "b", "1"],
             ["1", "1", "1", "1"]]
  })");
}

json a2() {
  return json::parse(R"({
    "labels": ["0", "a", "b", "1"],
    "prod": [["0", "0", "0", "0"],
             ["0", "0", "0", "a"],
             ["0", "0", "a", "b"],
             ["0", "a", "b", "1"]],
    "res":  [["1", "1", "1", "1"],
             ["b", "1", "1", "1"],
             ["a", "b", "1", "1"],
             ["0", "a", "b", "1"]],
    "meet": [["0", "0", "0", "0"],
             ["0", "a", "a", "a"],
             ["0", "a", "b", "b"],
             ["0", "a", "b", "1"]],
    "join": [["0", "a", "b", "1"],
             ["a", "a", "b", "1"],
             ["b", "b", "b", "1"],
             ["1", "1", "1", "1"]]
  })");
}

json a3() {
  return json::parse(R"({
    "labels": ["0", "a", "b", "c", "d", "1"],
    "prod": [["0", "0", "0", "0", "0", "0"],
             ["0", "a", "c", "c", "0", "a"],
             ["0", "c", "b", "c", "d", "b"],
             ["0", "c", "c", "c", "0", "c"],
             ["0", "0", "d", "0", "0", "d"],
             ["0", "a", "b", "c", "d", "1"]],
    "res":  [["1", "1", "1", "1", "1", "1"],
             ["d", "1", "b", "b", "d", "1"],
             ["0", "a", "1", "a", "d", "1"],
             ["d", "1", "1", "1", "d", "1"],
             ["a", "1", "1", "1", "1", "1"],
             ["0", "a", "b", "c", "d", "1"]]
  })");
}

json b2() {
  return json::parse(R"({
    "labels": ["0", "1"],
    "prod": [["0", "0"], ["0", "1"]],
    "res":  [["1", "1"], ["0", "1"]]
  })");
}

json pieces(const char* algebra, const char* claim, json full, json middle) {
  return json{{"algebra", algebra},
              {"claim", claim},
              {"interval", {"0", "1"}},
              {"grid", 10},
              {"pieces",
               {{{"range", {"0", "2/5"}}, {"set", std::move(full)}},
                {{"range", {"2/5", "4/5"}}, {"set", std::move(middle)}},
                {{"range", {"4/5", "1"}}, {"set", json::array()}}}}};
}

}  // namespace

std::vector<std::string> soft_ids() { return {"s1", "s2", "s3"}; }

std::optional<json> soft_document(std::string_view id) {
  if (id == "s1") return pieces("a1", "boolean", {"0", "a", "b", "1"}, {"a", "b", "1"});
  if (id == "s2") return pieces("a2", "mv", {"0", "a", "b", "1"}, {"1"});
  if (id == "s3") return pieces("a3", "g", {"0", "a", "b", "c", "d", "1"}, {"a", "1"});
  return std::nullopt;
}

std::vector<std::string> ids() { return {"a1", "a2", "a3", "b2"}; }

std::optional<json> document(std::string_view id) {
  if (id == "a1") return a1();
  if (id == "a2") return a2();
  if (id == "a3") return a3();
  if (id == "b2") return b2();
  return std::nullopt;
}

std::optional<FiniteMtlAlgebra> algebra(std::string_view id) {
  auto doc = document(id);
  if (!doc) return std::nullopt;
  return load_algebra(*doc);
}

}  // namespace mtlsoft::fixtures
