#ifndef MTLSOFT_VERIFIER_HPP
#define MTLSOFT_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mtlsoft/fuzzy.hpp"
#include "mtlsoft/soft.hpp"

namespace mtlsoft {

/// A fuzzy-filter predicate on mu.
struct FuzzySide {
  FuzzyFamily::Kind family;
  FilterKind kind;
  Route route = Route::Default;
};

/// "Every level of the soft set built from mu is a filter of all `kinds`."
struct SoftSide {
  SoftKind soft;
  std::vector<FilterKind> kinds;
};

enum class Direction { Iff, ForwardOnly };

/// Where a theorem's parameter interval comes from.
enum class IntervalRule {
  Fixed,       // the stated interval, never overridden
  Thresholds,  // a general (alpha, beta]: grid default unless overridden
};

/**
 * One characterization theorem, checked as lhs <=> rhs (or lhs => rhs).
 * The left side is a fuzzy predicate for the characterizations and a soft
 * predicate for the comparisons between soft-set kinds.
 */
struct TheoremSpec {
  std::string id;
  std::string statement;
  IntervalRule interval_rule = IntervalRule::Fixed;
  ParameterInterval interval;
  std::variant<FuzzySide, SoftSide> lhs;
  SoftSide rhs;
  Direction direction = Direction::Iff;
};

/// The 31 theorems, in the order they are stated.
const std::vector<TheoremSpec>& catalog();
const TheoremSpec* find_theorem(std::string_view id);

/// (max(1, D/4)/D, (D - D/4)/D]: (1/4, 3/4] at D = 4, (1/2, 1] at D = 2.
ParameterInterval default_thresholds(const Grid& grid);

/// Interval a theorem is checked on. An override is only accepted for
/// Thresholds-rule theorems; throws std::invalid_argument otherwise.
ParameterInterval resolve_interval(const TheoremSpec& spec, const Grid& grid,
                                   const std::optional<ParameterInterval>& override_interval);

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

struct VerifyOptions {
  /// Exhaustive when (D+1)^n <= budget, otherwise `budget` seeded samples.
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::optional<ParameterInterval> interval;
  unsigned threads = 1;
};

struct Counterexample {
  std::uint64_t index;  // position in the enumeration or sample stream
  FuzzySet mu;
  std::string failing_direction;
  std::string witness;
};

struct VerificationReport {
  std::string theorem;
  std::string algebra;
  int grid = 0;
  ParameterInterval interval;
  std::uint64_t checked = 0;
  bool sampled = false;
  std::vector<Counterexample> counterexamples;

  /// "Confirmed at this scale": no counterexample among the checked sets.
  bool confirmed() const { return counterexamples.empty(); }
};

/// Throws std::invalid_argument for off-grid intervals.
VerificationReport verify(const FiniteMtlAlgebra& alg, std::string_view algebra_id, const TheoremSpec& spec,
                          Grid grid, const VerifyOptions& options = {});

std::vector<VerificationReport> verify_all(const FiniteMtlAlgebra& alg, std::string_view algebra_id, Grid grid,
                                           const VerifyOptions& options = {});

/// First mu (in enumeration order) whose in-soft set over the theorem's
/// interval is MV- (T4.2.13) or G-filteristic (T4.3.12) but not Boolean
/// filteristic. nullopt means none exists at this scale, not a refutation.
std::optional<FuzzySet> find_strictness_witness(const FiniteMtlAlgebra& alg, std::string_view theorem_id, Grid grid,
                                                const VerifyOptions& options = {});

nlohmann::json to_json(const FiniteMtlAlgebra& alg, const VerificationReport& report);

}  // namespace mtlsoft

#endif  // MTLSOFT_VERIFIER_HPP
