#ifndef MTLSOFT_FUZZY_HPP
#define MTLSOFT_FUZZY_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mtlsoft/algebra.hpp"
#include "mtlsoft/filters.hpp"

namespace mtlsoft {

/// Exact rational in [0, 1]. Comparisons are by value (1/2 == 2/4).
class UnitRational {
 public:
  UnitRational() = default;
  UnitRational(std::int64_t num, std::int64_t den);

  /// Accepts "3/4", "0", "1" or a finite decimal such as "0.75".
  static UnitRational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool on_grid(std::int64_t d) const { return (num_ * d) % den_ == 0; }
  /// k such that this == k/d; throws if off the grid.
  std::int64_t grid_index(std::int64_t d) const;
  /// Smallest k with k/d >= this.
  std::int64_t grid_ceil(std::int64_t d) const;

  /// Reduced "p/q", or "0"/"1".
  std::string str() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend std::strong_ordering operator<=>(const UnitRational& a, const UnitRational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }
  friend bool operator==(const UnitRational& a, const UnitRational& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// a + b > 1, exactly.
inline bool sum_exceeds_one(const UnitRational& a, const UnitRational& b) {
  return a.num() * b.den() + b.num() * a.den() > a.den() * b.den();
}

/// The value grid {0, 1/D, ..., 1} with D even, so 1/2 is on it.
class Grid {
 public:
  explicit Grid(int denominator);

  int denominator() const { return d_; }
  UnitRational point(int k) const { return {k, d_}; }
  int half() const { return d_ / 2; }
  bool contains(const UnitRational& v) const { return v.on_grid(d_); }
  /// Grid index of v; throws std::invalid_argument if v is off the grid.
  int index(const UnitRational& v) const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int d_;
};

/**
 * A total map carrier -> grid. Values are stored as grid numerators, so
 * every comparison between values of one fuzzy set is an integer compare.
 */
class FuzzySet {
 public:
  FuzzySet(Grid grid, std::vector<int> numerators);
  static FuzzySet constant(std::size_t n, Grid grid, int k) { return {grid, std::vector<int>(n, k)}; }

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return num_.size(); }
  int level(Element x) const { return num_[x]; }
  UnitRational value(Element x) const { return grid_.point(num_[x]); }
  const std::vector<int>& levels() const { return num_; }

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;
  friend auto operator<=>(const FuzzySet& a, const FuzzySet& b) { return a.num_ <=> b.num_; }

 private:
  Grid grid_;
  std::vector<int> num_;
};

/// Characteristic function of a crisp subset (values 0 and 1).
FuzzySet characteristic(const CrispSubset& s, Grid grid);

/// {"grid": D, "values": {"a": "3/4", ...}}
nlohmann::json to_json(const FiniteMtlAlgebra& alg, const FuzzySet& mu);
/// Missing labels are an error; values must lie on the declared grid.
FuzzySet fuzzy_set_from_json(const FiniteMtlAlgebra& alg, const nlohmann::json& doc);
/// "1=9/10,b=3/5,a=3/5,0=3/10" on the given grid.
FuzzySet parse_fuzzy_set(const FiniteMtlAlgebra& alg, Grid grid, const std::string& assignments);
std::string format(const FiniteMtlAlgebra& alg, const FuzzySet& mu);

/// Relations between a fuzzy point x_t and a fuzzy set.
enum class Membership { In, Q, InOrQ, NotIn, NotQ, NotInOrNotQ };

struct MembershipQuery {
  Element x;
  UnitRational t;  // must be > 0
  Membership mode;
};

/// x_t in mu iff mu(x) >= t;  x_t q mu iff mu(x) + t > 1.
bool evaluate(const FuzzySet& mu, const MembershipQuery& q);

/// The four fuzzy-filter families. Each reduces to the inequality shape
///   max{mu(lhs), lo} >= min{mu(rhs)..., hi}
/// with (lo, hi] = (0,1] plain, (0,1/2] in-or-q, (1/2,1] bar, (alpha,beta] thresholds.
struct FuzzyFamily {
  enum class Kind { Plain, InOrQ, Bar, Thresholds };
  Kind kind = Kind::Plain;
  UnitRational alpha{0, 1};
  UnitRational beta{1, 1};

  static FuzzyFamily plain() { return {}; }
  static FuzzyFamily in_or_q() { return {Kind::InOrQ, {0, 1}, {1, 2}}; }
  static FuzzyFamily bar() { return {Kind::Bar, {1, 2}, {1, 1}}; }
  /// Requires 0 < alpha < beta <= 1.
  static FuzzyFamily thresholds(UnitRational alpha, UnitRational beta);

  std::string name() const;
  friend bool operator==(const FuzzyFamily&, const FuzzyFamily&) = default;
};

std::optional<FuzzyFamily::Kind> parse_family_kind(std::string_view text);
std::string_view to_string(FuzzyFamily::Kind kind);

/// Equivalent formulations, where several exist.
///   plain filter:  F1F2 (product + order-preserving), F3F4 (top + modus ponens)
///   plain boolean: Def (mu(x v x') = mu(1)), ImplicationForm, RestrictionForm
/// Default picks the definition; All evaluates every formulation and throws
/// RouteMismatch if they disagree.
enum class Route { Default, F1F2, F3F4, Def, ImplicationForm, RestrictionForm, All };

std::optional<Route> parse_route(std::string_view text);
std::string_view to_string(Route route);

class RouteMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws std::invalid_argument for a route that does not apply to the
/// family/kind, or thresholds that are off the fuzzy set's grid.
bool check_fuzzy(const FiniteMtlAlgebra& alg, const FuzzySet& mu, const FuzzyFamily& family, FilterKind kind,
                 Route route = Route::Default);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * All (D+1)^n grid maps in lexicographic order of the value vector
 * (element 0 most significant). Index-addressable, so disjoint index
 * ranges can be consumed independently.
 */
class FuzzySetSpace {
 public:
  /// Throws BudgetExceeded when (D+1)^n > budget.
  FuzzySetSpace(std::size_t n, Grid grid, std::uint64_t budget);

  /// (D+1)^n, saturating at UINT64_MAX.
  static std::uint64_t count(std::size_t n, Grid grid);

  std::uint64_t size() const { return size_; }
  FuzzySet at(std::uint64_t index) const;
  void for_each(const std::function<void(const FuzzySet&)>& visit) const;

 private:
  std::size_t n_;
  Grid grid_;
  std::uint64_t size_;
};

inline FuzzySetSpace enumerate_fuzzy_sets(std::size_t n, Grid grid, std::uint64_t budget) {
  return FuzzySetSpace(n, grid, budget);
}

}  // namespace mtlsoft

#endif  // MTLSOFT_FUZZY_HPP
