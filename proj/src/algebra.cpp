#include "mtlsoft/algebra.hpp"

#include <algorithm>
#include <map>

namespace mtlsoft {

namespace {

using nlohmann::json;

std::string describe(const std::vector<std::string>& labels, Element x, Element y) {
  return "(" + labels[x] + ", " + labels[y] + ")";
}

// Greatest lower bound in the order, if one exists.
std::optional<Element> infimum(const std::vector<unsigned char>& leq, std::size_t n, Element x, Element y) {
  std::optional<Element> best;
  for (Element z = 0; z < n; ++z) {
    if (!leq[z * n + x] || !leq[z * n + y]) continue;
    if (!best || leq[*best * n + z]) best = z;
  }
  if (!best) return std::nullopt;
  for (Element z = 0; z < n; ++z) {
    if (leq[z * n + x] && leq[z * n + y] && !leq[z * n + *best]) return std::nullopt;
  }
  return best;
}

std::optional<Element> supremum(const std::vector<unsigned char>& leq, std::size_t n, Element x, Element y) {
  std::optional<Element> best;
  for (Element z = 0; z < n; ++z) {
    if (!leq[x * n + z] || !leq[y * n + z]) continue;
    if (!best || leq[z * n + *best]) best = z;
  }
  if (!best) return std::nullopt;
  for (Element z = 0; z < n; ++z) {
    if (leq[x * n + z] && leq[y * n + z] && !leq[*best * n + z]) return std::nullopt;
  }
  return best;
}

OperationTable parse_table(const json& doc, const char* name, const std::map<std::string, Element, std::less<>>& index,
                           std::size_t n) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw AlgebraLoadError(std::string("missing table '") + name + "'");
  if (!it->is_array() || it->size() != n) {
    throw AlgebraLoadError(std::string("table '") + name + "' must have " + std::to_string(n) + " rows");
  }
  OperationTable table(n);
  for (std::size_t x = 0; x < n; ++x) {
    const json& row = (*it)[x];
    if (!row.is_array() || row.size() != n) {
      throw AlgebraLoadError(std::string("table '") + name + "' row " + std::to_string(x) + " must have " +
                             std::to_string(n) + " entries");
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (!row[y].is_string()) throw AlgebraLoadError(std::string("table '") + name + "' entries must be labels");
      const auto found = index.find(row[y].get<std::string>());
      if (found == index.end()) {
        throw AlgebraLoadError(std::string("table '") + name + "' uses unknown label '" + row[y].get<std::string>() +
                               "'");
      }
      table.at(x, y) = found->second;
    }
  }
  return table;
}

json table_to_json(const FiniteMtlAlgebra& alg, Element (FiniteMtlAlgebra::*op)(Element, Element) const) {
  json rows = json::array();
  for (Element x = 0; x < alg.size(); ++x) {
    json row = json::array();
    for (Element y = 0; y < alg.size(); ++y) row.push_back(alg.label((alg.*op)(x, y)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Collects violations for a fixed list of axioms.
class Scan {
 public:
  explicit Scan(std::vector<std::pair<const char*, const char*>> axioms) {
    for (auto& [id, text] : axioms) report_.axioms.push_back({id, text, true});
  }

  void check(bool holds, const char* id, std::vector<Element> elements) {
    if (holds) return;
    for (auto& a : report_.axioms) {
      if (a.id == id) a.passed = false;
    }
    report_.violations.push_back({id, std::move(elements)});
  }

  AxiomReport take() { return std::move(report_); }

 private:
  AxiomReport report_;
};

}  // namespace

std::optional<Element> FiniteMtlAlgebra::find(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

FiniteMtlAlgebra FiniteMtlAlgebra::from_tables(Tables tables) {
  const std::size_t n = tables.labels.size();
  if (n < 2) throw AlgebraLoadError("carrier needs at least two elements");
  if (n > kMaxCarrier) throw AlgebraLoadError("carrier larger than " + std::to_string(kMaxCarrier) + " elements");
  {
    auto sorted = tables.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw AlgebraLoadError("duplicate label");
  }
  for (const OperationTable* t : {&tables.prod, &tables.res}) {
    if (t->size() != n) throw AlgebraLoadError("operation table is not " + std::to_string(n) + "x" + std::to_string(n));
  }
  for (const auto* t : {&tables.meet, &tables.join}) {
    if (*t && (*t)->size() != n) throw AlgebraLoadError("lattice table is not " + std::to_string(n) + "x" + std::to_string(n));
  }

  FiniteMtlAlgebra alg;
  alg.labels_ = std::move(tables.labels);
  alg.prod_ = std::move(tables.prod);
  alg.res_ = std::move(tables.res);
  alg.bottom_ = tables.bottom.value_or(0);
  alg.top_ = tables.top.value_or(n - 1);
  if (alg.bottom_ >= n || alg.top_ >= n) throw AlgebraLoadError("bottom/top out of range");
  if (alg.bottom_ == alg.top_) throw AlgebraLoadError("bottom and top coincide");

  auto& leq = alg.leq_;
  leq.assign(n * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) leq[x * n + y] = alg.res_(x, y) == alg.top_ ? 1 : 0;
  }
  const auto& L = alg.labels_;
  for (Element x = 0; x < n; ++x) {
    if (!leq[x * n + x]) throw AlgebraLoadError("derived order is not reflexive at " + L[x]);
    if (!leq[alg.bottom_ * n + x]) throw AlgebraLoadError("bottom is not below " + L[x]);
    if (!leq[x * n + alg.top_]) throw AlgebraLoadError("top is not above " + L[x]);
    for (Element y = 0; y < n; ++y) {
      if (x != y && leq[x * n + y] && leq[y * n + x]) {
        throw AlgebraLoadError("derived order is not antisymmetric at " + describe(L, x, y));
      }
      for (Element z = 0; z < n; ++z) {
        if (leq[x * n + y] && leq[y * n + z] && !leq[x * n + z]) {
          throw AlgebraLoadError("derived order is not transitive at " + L[x] + " <= " + L[y] + " <= " + L[z]);
        }
      }
    }
  }

  alg.meet_ = OperationTable(n);
  alg.join_ = OperationTable(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const auto inf = infimum(leq, n, x, y);
      const auto sup = supremum(leq, n, x, y);
      if (!inf) throw AlgebraLoadError("no meet for " + describe(L, x, y));
      if (!sup) throw AlgebraLoadError("no join for " + describe(L, x, y));
      alg.meet_.at(x, y) = *inf;
      alg.join_.at(x, y) = *sup;
    }
  }
  if (tables.meet && *tables.meet != alg.meet_) throw AlgebraLoadError("supplied meet disagrees with derived order");
  if (tables.join && *tables.join != alg.join_) throw AlgebraLoadError("supplied join disagrees with derived order");
  return alg;
}

FiniteMtlAlgebra load_algebra(const json& doc) {
  if (!doc.is_object()) throw AlgebraLoadError("algebra document must be an object");
  const auto labels_it = doc.find("labels");
  if (labels_it == doc.end() || !labels_it->is_array()) throw AlgebraLoadError("missing 'labels' array");

  FiniteMtlAlgebra::Tables tables;
  std::map<std::string, Element, std::less<>> index;
  for (const auto& l : *labels_it) {
    if (!l.is_string()) throw AlgebraLoadError("labels must be strings");
    index.emplace(l.get<std::string>(), tables.labels.size());
    tables.labels.push_back(l.get<std::string>());
  }
  if (index.size() != tables.labels.size()) throw AlgebraLoadError("duplicate label");
  const std::size_t n = tables.labels.size();
  if (n < 2) throw AlgebraLoadError("carrier needs at least two elements");

  tables.prod = parse_table(doc, "prod", index, n);
  tables.res = parse_table(doc, "res", index, n);
  if (doc.contains("meet")) tables.meet = parse_table(doc, "meet", index, n);
  if (doc.contains("join")) tables.join = parse_table(doc, "join", index, n);
  for (auto [key, slot] : {std::pair{"bottom", &tables.bottom}, std::pair{"top", &tables.top}}) {
    if (!doc.contains(key)) continue;
    const json& v = doc.at(key);
    if (!v.is_string() || !index.contains(v.get<std::string>())) {
      throw AlgebraLoadError(std::string("'") + key + "' must name a label");
    }
    *slot = index.find(v.get<std::string>())->second;
  }
  return FiniteMtlAlgebra::from_tables(std::move(tables));
}

json to_json(const FiniteMtlAlgebra& alg) {
  return json{{"labels", alg.labels()},
              {"prod", table_to_json(alg, &FiniteMtlAlgebra::prod)},
              {"res", table_to_json(alg, &FiniteMtlAlgebra::res)},
              {"meet", table_to_json(alg, &FiniteMtlAlgebra::meet)},
              {"join", table_to_json(alg, &FiniteMtlAlgebra::join)},
              {"bottom", alg.label(alg.bottom())},
              {"top", alg.label(alg.top())}};
}

bool AxiomReport::passed(std::string_view id) const {
  for (const auto& a : axioms) {
    if (a.id == id) return a.passed;
  }
  throw std::out_of_range("unknown axiom id " + std::string(id));
}

std::size_t AxiomReport::count(std::string_view id) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == id; }));
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& a : other.axioms) {
    auto it = std::find_if(axioms.begin(), axioms.end(), [&](const AxiomStatus& s) { return s.id == a.id; });
    if (it == axioms.end()) {
      axioms.push_back(a);
    } else {
      it->passed = it->passed && a.passed;
    }
  }
  for (const auto& v : other.violations) {
    if (std::find(violations.begin(), violations.end(), v) == violations.end()) violations.push_back(v);
  }
}

AxiomReport validate_mtl(const FiniteMtlAlgebra& alg) {
  Scan scan({{"order", "x <= y iff x -> y = 1 is a partial order with 0 < 1 as bounds"},
             {"lattice", "meet and join are the inf and sup of the order"},
             {"assoc", "(x * y) * z = x * (y * z)"},
             {"comm", "x * y = y * x"},
             {"isotone", "x <= y implies x * z <= y * z"},
             {"unit", "x * 1 = x"},
             {"adjunction", "x * y <= z iff x <= y -> z"},
             {"prelinearity", "(x -> y) v (y -> x) = 1"}});
  const std::size_t n = alg.size();
  const Element top = alg.top();
  const Element bot = alg.bottom();

  scan.check(bot != top, "order", {bot, top});
  for (Element x = 0; x < n; ++x) {
    scan.check(alg.leq(x, x), "order", {x});
    scan.check(alg.leq(bot, x) && alg.leq(x, top), "order", {x});
    scan.check(alg.prod(x, top) == x, "unit", {x});
    for (Element y = 0; y < n; ++y) {
      scan.check(x == y || !(alg.leq(x, y) && alg.leq(y, x)), "order", {x, y});
      const Element m = alg.meet(x, y);
      const Element j = alg.join(x, y);
      scan.check(alg.leq(m, x) && alg.leq(m, y) && alg.leq(x, j) && alg.leq(y, j), "lattice", {x, y});
      scan.check(alg.prod(x, y) == alg.prod(y, x), "comm", {x, y});
      scan.check(alg.join(alg.res(x, y), alg.res(y, x)) == top, "prelinearity", {x, y});
      for (Element z = 0; z < n; ++z) {
        scan.check(!(alg.leq(x, y) && alg.leq(y, z)) || alg.leq(x, z), "order", {x, y, z});
        const bool lower = alg.leq(z, x) && alg.leq(z, y);
        const bool upper = alg.leq(x, z) && alg.leq(y, z);
        scan.check((!lower || alg.leq(z, m)) && (!upper || alg.leq(j, z)), "lattice", {x, y, z});
        scan.check(alg.prod(alg.prod(x, y), z) == alg.prod(x, alg.prod(y, z)), "assoc", {x, y, z});
        scan.check(!alg.leq(x, y) || alg.leq(alg.prod(x, z), alg.prod(y, z)), "isotone", {x, y, z});
        scan.check(alg.leq(alg.prod(x, y), z) == alg.leq(x, alg.res(y, z)), "adjunction", {x, y, z});
      }
    }
  }
  return scan.take();
}

AxiomReport check_derived_laws(const FiniteMtlAlgebra& alg) {
  Scan scan({{"rl1", "x <= y iff x -> y = 1"},
             {"rl2", "0 -> x = 1, 1 -> x = x, x -> (y -> x) = 1"},
             {"rl3", "y <= (y -> x) -> x"},
             {"rl4", "x -> (y -> z) = (x * y) -> z = y -> (x -> z)"},
             {"rl5", "x -> y <= (z -> x) -> (z -> y), x -> y <= (y -> z) -> (x -> z)"},
             {"mtl1", "x -> (y v z) = (x -> y) v (x -> z)"},
             {"mtl2", "x * y <= x ^ y"},
             {"mtl3", "x' = x''', x <= x'', x' * x = 0"},
             {"mtl4", "x v x' = 1 implies x ^ x' = 0"}});
  const std::size_t n = alg.size();
  const Element top = alg.top();
  const Element bot = alg.bottom();
  auto r = [&](Element a, Element b) { return alg.res(a, b); };
  auto neg = [&](Element a) { return alg.neg(a); };

  for (Element x = 0; x < n; ++x) {
    scan.check(r(bot, x) == top && r(top, x) == x, "rl2", {x});
    scan.check(neg(x) == neg(neg(neg(x))) && alg.leq(x, neg(neg(x))) && alg.prod(neg(x), x) == bot, "mtl3", {x});
    scan.check(alg.join(x, neg(x)) != top || alg.meet(x, neg(x)) == bot, "mtl4", {x});
    for (Element y = 0; y < n; ++y) {
      scan.check(alg.leq(x, y) == (r(x, y) == top), "rl1", {x, y});
      scan.check(r(x, r(y, x)) == top, "rl2", {x, y});
      scan.check(alg.leq(y, r(r(y, x), x)), "rl3", {x, y});
      scan.check(alg.leq(alg.prod(x, y), alg.meet(x, y)), "mtl2", {x, y});
      for (Element z = 0; z < n; ++z) {
        const Element lhs = r(x, r(y, z));
        scan.check(lhs == r(alg.prod(x, y), z) && lhs == r(y, r(x, z)), "rl4", {x, y, z});
        scan.check(alg.leq(r(x, y), r(r(z, x), r(z, y))) && alg.leq(r(x, y), r(r(y, z), r(x, z))), "rl5", {x, y, z});
        scan.check(r(x, alg.join(y, z)) == alg.join(r(x, y), r(x, z)), "mtl1", {x, y, z});
      }
    }
  }
  return scan.take();
}

json to_json(const FiniteMtlAlgebra& alg, const AxiomReport& report) {
  json axioms = json::array();
  for (const auto& a : report.axioms) {
    axioms.push_back({{"id", a.id}, {"law", a.description}, {"passed", a.passed}, {"violations", report.count(a.id)}});
  }
  json violations = json::array();
  for (const auto& v : report.violations) {
    json elems = json::array();
    for (Element e : v.elements) elems.push_back(alg.label(e));
    violations.push_back({{"axiom", v.axiom}, {"elements", std::move(elems)}});
  }
  return json{{"ok", report.ok()}, {"axioms", std::move(axioms)}, {"violations", std::move(violations)}};
}

}  // namespace mtlsoft
