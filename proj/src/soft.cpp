#include "mtlsoft/soft.hpp"

#include <algorithm>

namespace mtlsoft {

using nlohmann::json;

ParameterInterval ParameterInterval::make(UnitRational lo, UnitRational hi) {
  if (!(lo < hi)) throw std::invalid_argument("interval needs lo < hi, got (" + lo.str() + "," + hi.str() + "]");
  return {lo, hi};
}

ParameterInterval ParameterInterval::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != '(' && c != ']' && c != ' ') s.push_back(c);
  }
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("interval must be written lo,hi");
  return make(UnitRational::parse(s.substr(0, comma)), UnitRational::parse(s.substr(comma + 1)));
}

std::string_view to_string(SoftKind kind) {
  switch (kind) {
    case SoftKind::In: return "in";
    case SoftKind::Q: return "q";
    case SoftKind::Explicit: return "explicit";
  }
  return "?";
}

SoftSet::SoftSet(SoftKind kind, ParameterInterval interval, Grid grid,
                 std::vector<std::pair<UnitRational, CrispSubset>> levels)
    : kind_(kind), interval_(interval), grid_(grid), levels_(std::move(levels)) {
  if (!interval_.on_grid(grid_)) throw std::invalid_argument("interval " + interval_.str() + " is off the grid");
  const auto first = grid_.index(interval_.lo) + 1;
  const auto last = grid_.index(interval_.hi);
  if (levels_.size() != static_cast<std::size_t>(last - first + 1)) {
    throw std::invalid_argument("soft set needs one level per grid point of " + interval_.str());
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].first != grid_.point(first + static_cast<int>(i))) {
      throw std::invalid_argument("soft set levels are not the grid points of " + interval_.str());
    }
  }
}

const CrispSubset& SoftSet::at(const UnitRational& t) const {
  if (!interval_.contains(t)) throw std::out_of_range(t.str() + " is outside " + interval_.str());
  const auto k = t.grid_ceil(grid_.denominator());
  return levels_.at(static_cast<std::size_t>(k - grid_.index(interval_.lo) - 1)).second;
}

CrispSubset level_set(const FuzzySet& mu, SoftKind kind, const UnitRational& t) {
  CrispSubset s = CrispSubset::empty(mu.size());
  for (Element x = 0; x < mu.size(); ++x) {
    const bool member = kind == SoftKind::In ? mu.value(x) >= t : sum_exceeds_one(mu.value(x), t);
    if (member) s.insert(x);
  }
  return s;
}

SoftSet make_soft(const FuzzySet& mu, SoftKind kind, const ParameterInterval& interval) {
  if (kind == SoftKind::Explicit) throw std::invalid_argument("explicit soft sets are built from pieces");
  const Grid& grid = mu.grid();
  if (!interval.on_grid(grid)) {
    throw std::invalid_argument("interval " + interval.str() + " is off the 1/" + std::to_string(grid.denominator()) +
                                " grid");
  }
  const int d = grid.denominator();
  std::vector<std::pair<UnitRational, CrispSubset>> levels;
  for (int k = grid.index(interval.lo) + 1; k <= grid.index(interval.hi); ++k) {
    // On the grid: mu(x) >= k/D  iff  level >= k;  mu(x) + k/D > 1  iff  level > D - k.
    CrispSubset s = CrispSubset::empty(mu.size());
    for (Element x = 0; x < mu.size(); ++x) {
      if (kind == SoftKind::In ? mu.level(x) >= k : mu.level(x) > d - k) s.insert(x);
    }
    levels.emplace_back(grid.point(k), s);
  }
  return {kind, interval, grid, std::move(levels)};
}

SoftSet epsilon_soft(const FuzzySet& mu, const ParameterInterval& interval) {
  return make_soft(mu, SoftKind::In, interval);
}

SoftSet q_soft(const FuzzySet& mu, const ParameterInterval& interval) { return make_soft(mu, SoftKind::Q, interval); }

SoftVerdict classify_soft(const FiniteMtlAlgebra& alg, const SoftSet& soft, std::span<const FilterKind> kinds) {
  // Consecutive grid points often share a level; classify each distinct set once.
  std::optional<CrispSubset> last_ok;
  for (const auto& [t, level] : soft.levels()) {
    if (last_ok && *last_ok == level) continue;
    auto c = classify_soft_value(alg, level);
    const bool ok = std::all_of(kinds.begin(), kinds.end(), [&](FilterKind k) { return c.has(k); });
    if (!ok) return {false, SoftWitness{t, level, std::move(c)}};
    last_ok = level;
  }
  return {};
}

void validate_tiling(const ParameterInterval& interval, std::vector<ParameterInterval> ranges) {
  std::sort(ranges.begin(), ranges.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  UnitRational cursor = interval.lo;
  for (const auto& r : ranges) {
    if (r.lo < cursor) throw IncompleteSoftSet("pieces overlap at " + r.str());
    if (cursor < r.lo) throw IncompleteSoftSet("no value defined on (" + cursor.str() + "," + r.lo.str() + "]");
    cursor = r.hi;
  }
  if (cursor < interval.hi) throw IncompleteSoftSet("no value defined on (" + cursor.str() + "," + interval.hi.str() + "]");
  if (interval.hi < cursor) throw IncompleteSoftSet("pieces extend past " + interval.str());
}

SoftSet soft_set_from_pieces(const ParameterInterval& interval, Grid grid, const std::vector<SoftPiece>& pieces) {
  std::vector<ParameterInterval> ranges;
  for (const auto& p : pieces) {
    if (!p.range.on_grid(grid)) throw std::invalid_argument("piece " + p.range.str() + " is off the grid");
    ranges.push_back(p.range);
  }
  validate_tiling(interval, ranges);
  std::vector<std::pair<UnitRational, CrispSubset>> levels;
  for (int k = grid.index(interval.lo) + 1; k <= grid.index(interval.hi); ++k) {
    const UnitRational t = grid.point(k);
    const auto piece = std::find_if(pieces.begin(), pieces.end(), [&](const SoftPiece& p) { return p.range.contains(t); });
    levels.emplace_back(t, piece->value);
  }
  return {SoftKind::Explicit, interval, grid, std::move(levels)};
}

namespace {

ParameterInterval interval_from_json(const json& v) {
  if (!v.is_array() || v.size() != 2) throw std::invalid_argument("interval must be [lo, hi]");
  return ParameterInterval::make(UnitRational::parse(v[0].get<std::string>()), UnitRational::parse(v[1].get<std::string>()));
}

}  // namespace

SoftSet soft_set_from_json(const FiniteMtlAlgebra& alg, const json& doc) {
  if (!doc.is_object() || !doc.contains("pieces") || !doc.contains("grid")) {
    throw std::invalid_argument("soft set document needs 'grid' and 'pieces'");
  }
  const Grid grid(doc.at("grid").get<int>());
  const ParameterInterval interval =
      doc.contains("interval") ? interval_from_json(doc.at("interval")) : ParameterInterval{{0, 1}, {1, 1}};
  std::vector<SoftPiece> pieces;
  for (const auto& p : doc.at("pieces")) {
    pieces.push_back({interval_from_json(p.at("range")), subset_from_json(alg, p.at("set"))});
  }
  return soft_set_from_pieces(interval, grid, pieces);
}

json to_json(const FiniteMtlAlgebra& alg, const SoftSet& soft) {
  json levels = json::array();
  for (const auto& [t, s] : soft.levels()) levels.push_back(json::array({t.str(), to_json(alg, s)}));
  return json{{"kind", to_string(soft.kind())},
              {"interval", json::array({soft.interval().lo.str(), soft.interval().hi.str()})},
              {"grid", soft.grid().denominator()},
              {"levels", std::move(levels)}};
}

json to_json(const FiniteMtlAlgebra& alg, const SoftVerdict& verdict) {
  json out{{"holds", verdict.holds}};
  if (verdict.witness) {
    out["witness"] = {{"t", verdict.witness->t.str()},
                      {"level", to_json(alg, verdict.witness->level)},
                      {"classification", to_json(alg, verdict.witness->classification)}};
  }
  return out;
}

}  // namespace mtlsoft
