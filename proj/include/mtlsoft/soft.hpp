#ifndef MTLSOFT_SOFT_HPP
#define MTLSOFT_SOFT_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mtlsoft/filters.hpp"
#include "mtlsoft/fuzzy.hpp"
#include "mtlsoft/subset.hpp"

namespace mtlsoft {

/// The half-open parameter interval (lo, hi] with 0 <= lo < hi <= 1.
struct ParameterInterval {
  UnitRational lo;
  UnitRational hi{1, 1};

  static ParameterInterval make(UnitRational lo, UnitRational hi);
  /// "lo,hi" (with or without the "(" and "]").
  static ParameterInterval parse(std::string_view text);

  bool contains(const UnitRational& t) const { return lo < t && t <= hi; }
  bool on_grid(const Grid& grid) const { return grid.contains(lo) && grid.contains(hi); }
  std::string str() const { return "(" + lo.str() + "," + hi.str() + "]"; }

  friend bool operator==(const ParameterInterval&, const ParameterInterval&) = default;
};

/// In: t -> {x | mu(x) >= t};  Q: t -> {x | mu(x) + t > 1};  Explicit: given pieces.
enum class SoftKind { In, Q, Explicit };

std::string_view to_string(SoftKind kind);

/**
 * A soft set materialized at the grid points of its interval.
 *
 * For In/Q soft sets the level map is constant on every ((k-1)/D, k/D]
 * because all breakpoints (mu(x) and 1 - mu(x)) are grid multiples, so the
 * grid family represents the whole real-parameter family.
 */
class SoftSet {
 public:
  SoftSet(SoftKind kind, ParameterInterval interval, Grid grid, std::vector<std::pair<UnitRational, CrispSubset>> levels);

  SoftKind kind() const { return kind_; }
  const ParameterInterval& interval() const { return interval_; }
  const Grid& grid() const { return grid_; }
  /// Ascending by threshold; one entry per grid point in (lo, hi].
  const std::vector<std::pair<UnitRational, CrispSubset>>& levels() const { return levels_; }

  /// Value at any t in (lo, hi], via its representative grid point ceil(tD)/D.
  const CrispSubset& at(const UnitRational& t) const;

 private:
  SoftKind kind_;
  ParameterInterval interval_;
  Grid grid_;
  std::vector<std::pair<UnitRational, CrispSubset>> levels_;
};

/// Definitional level set at an arbitrary (possibly off-grid) threshold.
CrispSubset level_set(const FuzzySet& mu, SoftKind kind, const UnitRational& t);

/// Throw std::invalid_argument if the interval is off the fuzzy set's grid.
SoftSet epsilon_soft(const FuzzySet& mu, const ParameterInterval& interval);
SoftSet q_soft(const FuzzySet& mu, const ParameterInterval& interval);
SoftSet make_soft(const FuzzySet& mu, SoftKind kind, const ParameterInterval& interval);

struct SoftWitness {
  UnitRational t;
  CrispSubset level;
  FilterClassification classification;
};

struct SoftVerdict {
  bool holds = true;
  /// First failing threshold, if any.
  std::optional<SoftWitness> witness;
};

/// Every level is a filter of every requested kind (the empty set counts
/// as a filter of every kind).
SoftVerdict classify_soft(const FiniteMtlAlgebra& alg, const SoftSet& soft, std::span<const FilterKind> kinds);
inline SoftVerdict classify_soft(const FiniteMtlAlgebra& alg, const SoftSet& soft, FilterKind kind) {
  return classify_soft(alg, soft, std::span<const FilterKind>(&kind, 1));
}

/// Raised for explicit soft sets whose pieces do not tile the interval.
class IncompleteSoftSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws IncompleteSoftSet unless the (lo, hi] ranges tile `interval`
/// exactly (no gaps, no overlaps).
void validate_tiling(const ParameterInterval& interval, std::vector<ParameterInterval> ranges);

struct SoftPiece {
  ParameterInterval range;
  CrispSubset value;
};

/// Materializes an explicit piecewise soft set. Piece boundaries must be on
/// the grid; the pieces must tile the interval.
SoftSet soft_set_from_pieces(const ParameterInterval& interval, Grid grid, const std::vector<SoftPiece>& pieces);

/// {"interval": ["0","1"], "grid": 10, "pieces": [{"range": ["0","2/5"], "set": [labels]}, ...]}
SoftSet soft_set_from_json(const FiniteMtlAlgebra& alg, const nlohmann::json& doc);

/// {"kind", "interval", "grid", "levels": [["1/4", [labels]], ...]}
nlohmann::json to_json(const FiniteMtlAlgebra& alg, const SoftSet& soft);
nlohmann::json to_json(const FiniteMtlAlgebra& alg, const SoftVerdict& verdict);

}  // namespace mtlsoft

#endif  // MTLSOFT_SOFT_HPP
