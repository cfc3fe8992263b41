#include "mtlsoft/fuzzy.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace mtlsoft {

using nlohmann::json;

// ---------------------------------------------------------------------------
// UnitRational / Grid

UnitRational::UnitRational(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("denominator must be positive");
  if (num < 0 || num > den) throw std::invalid_argument("value outside [0,1]");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

UnitRational UnitRational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return {parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text)};
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 15) throw std::invalid_argument("too many decimals: '" + std::string(text) + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t whole = dot == 0 ? 0 : parse_int(text.substr(0, dot), text);
    const std::int64_t part = frac.empty() ? 0 : parse_int(frac, text);
    return {whole * den + part, den};
  }
  return {parse_int(text, text), 1};
}

std::int64_t UnitRational::grid_index(std::int64_t d) const {
  if (!on_grid(d)) throw std::invalid_argument(str() + " is not on the 1/" + std::to_string(d) + " grid");
  return num_ * d / den_;
}

std::int64_t UnitRational::grid_ceil(std::int64_t d) const { return (num_ * d + den_ - 1) / den_; }

std::string UnitRational::str() const {
  if (num_ == 0) return "0";
  if (num_ == den_) return "1";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Grid::Grid(int denominator) : d_(denominator) {
  if (denominator <= 0 || denominator % 2 != 0) {
    throw std::invalid_argument("grid denominator must be a positive even integer, got " + std::to_string(denominator));
  }
}

int Grid::index(const UnitRational& v) const { return static_cast<int>(v.grid_index(d_)); }

// ---------------------------------------------------------------------------
// FuzzySet

FuzzySet::FuzzySet(Grid grid, std::vector<int> numerators) : grid_(grid), num_(std::move(numerators)) {
  for (int k : num_) {
    if (k < 0 || k > grid_.denominator()) throw std::invalid_argument("fuzzy value off the grid");
  }
}

FuzzySet characteristic(const CrispSubset& s, Grid grid) {
  std::vector<int> levels(s.carrier_size());
  for (Element x = 0; x < levels.size(); ++x) levels[x] = s.contains(x) ? grid.denominator() : 0;
  return {grid, std::move(levels)};
}

json to_json(const FiniteMtlAlgebra& alg, const FuzzySet& mu) {
  json values = json::object();
  for (Element x = 0; x < mu.size(); ++x) values[alg.label(x)] = mu.value(x).str();
  return json{{"grid", mu.grid().denominator()}, {"values", std::move(values)}};
}

FuzzySet fuzzy_set_from_json(const FiniteMtlAlgebra& alg, const json& doc) {
  if (!doc.is_object() || !doc.contains("grid") || !doc.contains("values")) {
    throw std::invalid_argument("fuzzy set document needs 'grid' and 'values'");
  }
  const Grid grid(doc.at("grid").get<int>());
  const json& values = doc.at("values");
  if (!values.is_object()) throw std::invalid_argument("'values' must map labels to fractions");
  std::vector<int> levels(alg.size(), -1);
  for (const auto& [label, v] : values.items()) {
    const auto e = alg.find(label);
    if (!e) throw std::invalid_argument("unknown label '" + label + "'");
    const UnitRational r = v.is_string() ? UnitRational::parse(v.get<std::string>())
                                         : UnitRational::parse(std::to_string(v.get<int>()));
    levels[*e] = grid.index(r);
  }
  for (Element x = 0; x < alg.size(); ++x) {
    if (levels[x] < 0) throw std::invalid_argument("fuzzy set has no value for '" + alg.label(x) + "'");
  }
  return {grid, std::move(levels)};
}

FuzzySet parse_fuzzy_set(const FiniteMtlAlgebra& alg, Grid grid, const std::string& assignments) {
  json values = json::object();
  std::istringstream in(assignments);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected label=value, got '" + item + "'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(' ');
      const auto e = s.find_last_not_of(' ');
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    values[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
  }
  return fuzzy_set_from_json(alg, json{{"grid", grid.denominator()}, {"values", values}});
}

std::string format(const FiniteMtlAlgebra& alg, const FuzzySet& mu) {
  std::ostringstream os;
  os << '{';
  for (Element x = 0; x < mu.size(); ++x) {
    if (x) os << ", ";
    os << alg.label(x) << ": " << mu.value(x).str();
  }
  os << '}';
  return os.str();
}

bool evaluate(const FuzzySet& mu, const MembershipQuery& q) {
  if (q.t.num() == 0) throw std::invalid_argument("fuzzy point level must be positive");
  const UnitRational v = mu.value(q.x);
  const bool in = v >= q.t;
  const bool quasi = sum_exceeds_one(v, q.t);
  switch (q.mode) {
    case Membership::In: return in;
    case Membership::Q: return quasi;
    case Membership::InOrQ: return in || quasi;
    case Membership::NotIn: return !in;
    case Membership::NotQ: return !quasi;
    case Membership::NotInOrNotQ: return !in || !quasi;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Families and routes

FuzzyFamily FuzzyFamily::thresholds(UnitRational alpha, UnitRational beta) {
  if (!(UnitRational(0, 1) < alpha && alpha < beta)) {
    throw std::invalid_argument("thresholds need 0 < alpha < beta <= 1, got (" + alpha.str() + ", " + beta.str() + "]");
  }
  return {Kind::Thresholds, alpha, beta};
}

std::string_view to_string(FuzzyFamily::Kind kind) {
  switch (kind) {
    case FuzzyFamily::Kind::Plain: return "plain";
    case FuzzyFamily::Kind::InOrQ: return "eiq";
    case FuzzyFamily::Kind::Bar: return "bar";
    case FuzzyFamily::Kind::Thresholds: return "thresholds";
  }
  return "?";
}

std::optional<FuzzyFamily::Kind> parse_family_kind(std::string_view text) {
  using K = FuzzyFamily::Kind;
  for (auto k : {K::Plain, K::InOrQ, K::Bar, K::Thresholds}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::string FuzzyFamily::name() const {
  std::string out(to_string(kind));
  if (kind == Kind::Thresholds) out += "(" + alpha.str() + "," + beta.str() + "]";
  return out;
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::Default: return "default";
    case Route::F1F2: return "f1f2";
    case Route::F3F4: return "f3f4";
    case Route::Def: return "def";
    case Route::ImplicationForm: return "ii";
    case Route::RestrictionForm: return "iii";
    case Route::All: return "all";
  }
  return "?";
}

std::optional<Route> parse_route(std::string_view text) {
  for (auto r : {Route::Default, Route::F1F2, Route::F3F4, Route::Def, Route::ImplicationForm, Route::RestrictionForm,
                 Route::All}) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

namespace {

// Numerator bounds (lo, hi] of the family on the fuzzy set's grid.
class Capped {
 public:
  Capped(const FiniteMtlAlgebra& alg, const FuzzySet& mu, const FuzzyFamily& family) : alg_(alg), mu_(mu) {
    const Grid& grid = mu.grid();
    switch (family.kind) {
      case FuzzyFamily::Kind::Plain: lo_ = 0, hi_ = grid.denominator(); break;
      case FuzzyFamily::Kind::InOrQ: lo_ = 0, hi_ = grid.half(); break;
      case FuzzyFamily::Kind::Bar: lo_ = grid.half(), hi_ = grid.denominator(); break;
      case FuzzyFamily::Kind::Thresholds:
        if (!grid.contains(family.alpha) || !grid.contains(family.beta)) {
          throw std::invalid_argument("thresholds " + family.name() + " are off the 1/" +
                                      std::to_string(grid.denominator()) + " grid");
        }
        if (!(family.alpha.num() > 0 && family.alpha < family.beta)) {
          throw std::invalid_argument("thresholds need 0 < alpha < beta <= 1");
        }
        lo_ = grid.index(family.alpha), hi_ = grid.index(family.beta);
        break;
    }
  }

  bool ok(int lhs, int rhs) const { return std::max(lhs, lo_) >= std::min(rhs, hi_); }

  int mu(Element x) const { return mu_.level(x); }

  bool filter() const {
    const std::size_t n = alg_.size();
    const int top = mu(alg_.top());
    for (Element x = 0; x < n; ++x) {
      if (!ok(top, mu(x))) return false;
      for (Element y = 0; y < n; ++y) {
        if (!ok(mu(y), std::min(mu(alg_.res(x, y)), mu(x)))) return false;
      }
    }
    return true;
  }

  // mu(x -> z) against mu(x -> (z' -> y)) and mu(y -> z).
  bool boolean() const {
    const std::size_t n = alg_.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          const int rhs = std::min(mu(alg_.res(x, alg_.res(alg_.neg(z), y))), mu(alg_.res(y, z)));
          if (!ok(mu(alg_.res(x, z)), rhs)) return false;
        }
      }
    }
    return true;
  }

  bool mv() const {
    const std::size_t n = alg_.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!ok(mu(alg_.res(alg_.res(alg_.res(y, x), x), y)), mu(alg_.res(x, y)))) return false;
      }
    }
    return true;
  }

  bool g() const {
    const std::size_t n = alg_.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!ok(mu(alg_.res(x, y)), mu(alg_.res(alg_.prod(x, x), y)))) return false;
      }
    }
    return true;
  }

 private:
  const FiniteMtlAlgebra& alg_;
  const FuzzySet& mu_;
  int lo_ = 0;
  int hi_ = 0;
};

bool plain_filter_product_form(const FiniteMtlAlgebra& alg, const FuzzySet& mu) {
  const std::size_t n = alg.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (mu.level(alg.prod(x, y)) < std::min(mu.level(x), mu.level(y))) return false;
      if (alg.leq(x, y) && mu.level(x) > mu.level(y)) return false;
    }
  }
  return true;
}

bool plain_boolean_definition(const FiniteMtlAlgebra& alg, const FuzzySet& mu) {
  for (Element x = 0; x < alg.size(); ++x) {
    if (mu.level(alg.join(x, alg.neg(x))) != mu.level(alg.top())) return false;
  }
  return true;
}

// mu(x) >= mu((x -> y) -> x)
bool plain_boolean_restriction_form(const FiniteMtlAlgebra& alg, const FuzzySet& mu) {
  const std::size_t n = alg.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (mu.level(x) < mu.level(alg.res(alg.res(x, y), x))) return false;
    }
  }
  return true;
}

bool route_applies(const FuzzyFamily& family, FilterKind kind, Route route) {
  switch (route) {
    case Route::Default:
    case Route::All: return true;
    case Route::F1F2:
    case Route::F3F4: return family.kind == FuzzyFamily::Kind::Plain && kind == FilterKind::Filter;
    case Route::Def:
    case Route::ImplicationForm:
    case Route::RestrictionForm: return family.kind == FuzzyFamily::Kind::Plain && kind == FilterKind::Boolean;
  }
  return false;
}

bool agree(std::initializer_list<bool> verdicts, const char* what) {
  const bool first = *verdicts.begin();
  for (bool v : verdicts) {
    if (v != first) throw RouteMismatch(std::string("equivalent formulations disagree: ") + what);
  }
  return first;
}

}  // namespace

bool check_fuzzy(const FiniteMtlAlgebra& alg, const FuzzySet& mu, const FuzzyFamily& family, FilterKind kind,
                 Route route) {
  if (mu.size() != alg.size()) throw std::invalid_argument("fuzzy set and algebra differ in size");
  if (!route_applies(family, kind, route)) {
    throw std::invalid_argument("route '" + std::string(to_string(route)) + "' does not apply to " + family.name() +
                                " " + std::string(to_string(kind)));
  }
  const Capped capped(alg, mu, family);
  const bool plain = family.kind == FuzzyFamily::Kind::Plain;

  bool filter = false;
  if (!plain) {
    filter = capped.filter();
  } else if (route == Route::F3F4) {
    filter = capped.filter();
  } else if (route == Route::All) {
    filter = agree({plain_filter_product_form(alg, mu), capped.filter()}, "fuzzy filter (F1-F2 vs F3-F4)");
  } else {
    filter = plain_filter_product_form(alg, mu);
  }
  if (kind == FilterKind::Filter || !filter) return filter;

  switch (kind) {
    case FilterKind::Boolean:
      if (!plain) return capped.boolean();
      switch (route) {
        case Route::ImplicationForm: return capped.boolean();
        case Route::RestrictionForm: return plain_boolean_restriction_form(alg, mu);
        case Route::All:
          return agree({plain_boolean_definition(alg, mu), capped.boolean(), plain_boolean_restriction_form(alg, mu)},
                       "fuzzy Boolean filter (definition vs (ii) vs (iii))");
        default: return plain_boolean_definition(alg, mu);
      }
    case FilterKind::MV: return capped.mv();
    case FilterKind::G: return capped.g();
    case FilterKind::Filter: break;
  }
  return filter;
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t FuzzySetSpace::count(std::size_t n, Grid grid) {
  const std::uint64_t base = static_cast<std::uint64_t>(grid.denominator()) + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    total *= base;
  }
  return total;
}

FuzzySetSpace::FuzzySetSpace(std::size_t n, Grid grid, std::uint64_t budget)
    : n_(n), grid_(grid), size_(count(n, grid)) {
  if (size_ > budget) {
    throw BudgetExceeded(std::to_string(grid.denominator() + 1) + "^" + std::to_string(n) +
                         " fuzzy sets exceed the budget of " + std::to_string(budget));
  }
}

FuzzySet FuzzySetSpace::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("fuzzy set index out of range");
  const std::uint64_t base = static_cast<std::uint64_t>(grid_.denominator()) + 1;
  std::vector<int> levels(n_);
  for (std::size_t i = n_; i-- > 0;) {
    levels[i] = static_cast<int>(index % base);
    index /= base;
  }
  return {grid_, std::move(levels)};
}

void FuzzySetSpace::for_each(const std::function<void(const FuzzySet&)>& visit) const {
  std::vector<int> levels(n_, 0);
  const int d = grid_.denominator();
  for (std::uint64_t i = 0; i < size_; ++i) {
    visit(FuzzySet(grid_, levels));
    for (std::size_t pos = n_; pos-- > 0;) {
      if (++levels[pos] <= d) break;
      levels[pos] = 0;
    }
  }
}

}  // namespace mtlsoft
