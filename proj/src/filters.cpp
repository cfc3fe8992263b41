#include "mtlsoft/filters.hpp"

#include <algorithm>
#include <sstream>

namespace mtlsoft {

using nlohmann::json;

nlohmann::json to_json(const FiniteMtlAlgebra& alg, const CrispSubset& s) {
  json out = json::array();
  for (Element e : s.elements()) out.push_back(alg.label(e));
  return out;
}

std::string format(const FiniteMtlAlgebra& alg, const CrispSubset& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Element e : s.elements()) {
    if (!first) os << ", ";
    os << alg.label(e);
    first = false;
  }
  os << '}';
  return os.str();
}

CrispSubset subset_from_json(const FiniteMtlAlgebra& alg, const json& labels) {
  if (!labels.is_array()) throw std::invalid_argument("subset must be an array of labels");
  CrispSubset s = CrispSubset::empty(alg.size());
  for (const auto& l : labels) {
    if (!l.is_string()) throw std::invalid_argument("subset entries must be labels");
    const auto e = alg.find(l.get<std::string>());
    if (!e) throw std::invalid_argument("unknown label '" + l.get<std::string>() + "'");
    s.insert(*e);
  }
  return s;
}

CrispSubset parse_subset(const FiniteMtlAlgebra& alg, const std::string& comma_separated) {
  json labels = json::array();
  std::string item;
  std::istringstream in(comma_separated);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t{}");
    const auto e = item.find_last_not_of(" \t{}");
    if (b == std::string::npos) continue;
    labels.push_back(item.substr(b, e - b + 1));
  }
  return subset_from_json(alg, labels);
}

std::string_view to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::Filter: return "filter";
    case FilterKind::Boolean: return "boolean";
    case FilterKind::MV: return "mv";
    case FilterKind::G: return "g";
  }
  return "?";
}

std::optional<FilterKind> parse_filter_kind(std::string_view text) {
  for (auto k : {FilterKind::Filter, FilterKind::Boolean, FilterKind::MV, FilterKind::G}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

bool is_product_filter(const FiniteMtlAlgebra& alg, const CrispSubset& s) {
  if (s.is_empty()) return false;
  const std::size_t n = alg.size();
  for (Element x = 0; x < n; ++x) {
    if (!s.contains(x)) continue;
    for (Element y = 0; y < n; ++y) {
      if (s.contains(y) && !s.contains(alg.prod(x, y))) return false;
      if (alg.leq(x, y) && !s.contains(y)) return false;
    }
  }
  return true;
}

namespace {

// First (x, y) with x, x -> y in s and y not in s.
std::optional<std::vector<Element>> modus_ponens_violation(const FiniteMtlAlgebra& alg, const CrispSubset& s) {
  if (!s.contains(alg.top())) return std::vector<Element>{alg.top()};
  const std::size_t n = alg.size();
  for (Element x = 0; x < n; ++x) {
    if (!s.contains(x)) continue;
    for (Element y = 0; y < n; ++y) {
      if (s.contains(alg.res(x, y)) && !s.contains(y)) return std::vector<Element>{x, y};
    }
  }
  return std::nullopt;
}

FilterClassification classify_filter_impl(const FiniteMtlAlgebra& alg, const CrispSubset& s, bool is_filter) {
  FilterClassification c;
  c.is_filter = is_filter;
  if (!is_filter) {
    if (auto v = modus_ponens_violation(alg, s)) c.witnesses.push_back({FilterKind::Filter, *v});
    return c;
  }
  const std::size_t n = alg.size();
  c.boolean = c.g = c.mv = true;
  for (Element x = 0; x < n && c.boolean; ++x) {
    if (!s.contains(alg.join(x, alg.neg(x)))) {
      c.boolean = false;
      c.witnesses.push_back({FilterKind::Boolean, {x}});
    }
  }
  for (Element x = 0; x < n && c.g; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (s.contains(alg.res(alg.prod(x, x), y)) && !s.contains(alg.res(x, y))) {
        c.g = false;
        c.witnesses.push_back({FilterKind::G, {x, y}});
        break;
      }
    }
  }
  for (Element x = 0; x < n && c.mv; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (s.contains(alg.res(x, y)) && !s.contains(alg.res(alg.res(alg.res(y, x), x), y))) {
        c.mv = false;
        c.witnesses.push_back({FilterKind::MV, {x, y}});
        break;
      }
    }
  }
  return c;
}

}  // namespace

bool is_deductive_filter(const FiniteMtlAlgebra& alg, const CrispSubset& s) {
  return !s.is_empty() && !modus_ponens_violation(alg, s);
}

bool is_filter(const FiniteMtlAlgebra& alg, const CrispSubset& s) {
  const bool by_product = is_product_filter(alg, s);
  const bool by_modus_ponens = is_deductive_filter(alg, s);
  if (by_product != by_modus_ponens) {
    throw FilterDefinitionMismatch("filter characterizations disagree on " + format(alg, s));
  }
  return by_product;
}

bool FilterClassification::has(FilterKind kind) const {
  switch (kind) {
    case FilterKind::Filter: return is_filter;
    case FilterKind::Boolean: return boolean;
    case FilterKind::MV: return mv;
    case FilterKind::G: return g;
  }
  return false;
}

const FilterWitness* FilterClassification::witness(FilterKind kind) const {
  for (const auto& w : witnesses) {
    if (w.property == kind) return &w;
  }
  return nullptr;
}

FilterClassification classify_filter(const FiniteMtlAlgebra& alg, const CrispSubset& s) {
  return classify_filter_impl(alg, s, is_filter(alg, s));
}

FilterClassification classify_soft_value(const FiniteMtlAlgebra& alg, const CrispSubset& s) {
  if (s.is_empty()) return {true, true, true, true, {}};
  return classify_filter(alg, s);
}

std::vector<CrispSubset> enumerate_filters(const FiniteMtlAlgebra& alg, std::size_t cap) {
  const std::size_t n = alg.size();
  if (n > cap || n >= 64) {
    throw CarrierTooLarge("carrier of " + std::to_string(n) + " elements exceeds the enumeration cap of " +
                          std::to_string(cap));
  }
  std::vector<CrispSubset> out;
  // Every filter contains top, so only masks with the top bit set are candidates.
  const std::uint64_t top_bit = std::uint64_t{1} << alg.top();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if ((mask & top_bit) == 0) continue;
    CrispSubset s(n, mask);
    if (is_deductive_filter(alg, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const CrispSubset& a, const CrispSubset& b) { return canonical_less(a, b); });
  return out;
}

CrispSubset generated_filter(const FiniteMtlAlgebra& alg, const CrispSubset& seed) {
  if (seed.is_empty()) throw std::invalid_argument("generated_filter needs a non-empty seed");
  const std::size_t n = alg.size();
  CrispSubset s = seed;
  s.insert(alg.top());
  for (bool changed = true; changed;) {
    changed = false;
    for (Element x = 0; x < n; ++x) {
      if (!s.contains(x)) continue;
      for (Element y = 0; y < n; ++y) {
        for (Element z : {s.contains(y) ? alg.prod(x, y) : x, alg.leq(x, y) ? y : x}) {
          if (!s.contains(z)) {
            s.insert(z);
            changed = true;
          }
        }
      }
    }
  }
  return s;
}

DecompositionReport crisp_decomposition_check(const FiniteMtlAlgebra& alg, std::size_t cap) {
  DecompositionReport report;
  for (const auto& f : enumerate_filters(alg, cap)) {
    ++report.filters_checked;
    auto c = classify_filter(alg, f);
    if (c.boolean != (c.g && c.mv)) report.counterexamples.emplace_back(f, std::move(c));
  }
  return report;
}

json to_json(const FiniteMtlAlgebra& alg, const FilterClassification& c) {
  json witnesses = json::object();
  for (const auto& w : c.witnesses) {
    json elems = json::array();
    for (Element e : w.elements) elems.push_back(alg.label(e));
    witnesses[std::string(to_string(w.property))] = std::move(elems);
  }
  return json{{"filter", c.is_filter}, {"boolean", c.boolean}, {"g", c.g}, {"mv", c.mv}, {"witnesses", witnesses}};
}

json to_json(const FiniteMtlAlgebra& alg, const DecompositionReport& r) {
  json ces = json::array();
  for (const auto& [s, c] : r.counterexamples) ces.push_back({{"subset", to_json(alg, s)}, {"classification", to_json(alg, c)}});
  return json{{"filters_checked", r.filters_checked}, {"counterexamples", std::move(ces)}};
}

}  // namespace mtlsoft
