#ifndef MTLSOFT_FILTERS_HPP
#define MTLSOFT_FILTERS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mtlsoft/algebra.hpp"
#include "mtlsoft/subset.hpp"

namespace mtlsoft {

enum class FilterKind { Filter, Boolean, MV, G };

std::string_view to_string(FilterKind kind);
std::optional<FilterKind> parse_filter_kind(std::string_view text);

/// Raised when the two equivalent filter characterizations disagree. On a
/// validated algebra this signals a defect, not bad input.
class FilterDefinitionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CarrierTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed under the product and upward closed. False for the empty set.
bool is_product_filter(const FiniteMtlAlgebra& alg, const CrispSubset& s);

/// Contains top and closed under modus ponens. False for the empty set.
bool is_deductive_filter(const FiniteMtlAlgebra& alg, const CrispSubset& s);

/// Evaluates both characterizations; throws FilterDefinitionMismatch if
/// they disagree.
bool is_filter(const FiniteMtlAlgebra& alg, const CrispSubset& s);

struct FilterWitness {
  FilterKind property;
  std::vector<Element> elements;
};

struct FilterClassification {
  bool is_filter = false;
  bool boolean = false;
  bool g = false;
  bool mv = false;
  /// Lexicographically first violation for every property that failed.
  std::vector<FilterWitness> witnesses;

  bool has(FilterKind kind) const;
  const FilterWitness* witness(FilterKind kind) const;
};

/// Witness layouts:
///   Filter   (x, y) with x in A, x -> y in A, y not in A; or (1) if 1 is missing
///   Boolean  (x) with x v x' not in A
///   G        (x, y) with x*x -> y in A, x -> y not in A
///   MV       (x, y) with x -> y in A, ((y -> x) -> x) -> y not in A
/// Boolean/G/MV are only evaluated on filters.
FilterClassification classify_filter(const FiniteMtlAlgebra& alg, const CrispSubset& s);

/// As classify_filter, but the empty set counts as a filter of every kind.
FilterClassification classify_soft_value(const FiniteMtlAlgebra& alg, const CrispSubset& s);

inline constexpr std::size_t kDefaultFilterCap = 20;

/// All non-empty filters in canonical (size, mask) order.
std::vector<CrispSubset> enumerate_filters(const FiniteMtlAlgebra& alg, std::size_t cap = kDefaultFilterCap);

/// Least filter containing `seed` (which must be non-empty).
CrispSubset generated_filter(const FiniteMtlAlgebra& alg, const CrispSubset& seed);

struct DecompositionReport {
  std::size_t filters_checked = 0;
  /// Filters on which boolean != (g && mv).
  std::vector<std::pair<CrispSubset, FilterClassification>> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// Checks boolean <=> (g && mv) on every enumerated filter.
DecompositionReport crisp_decomposition_check(const FiniteMtlAlgebra& alg, std::size_t cap = kDefaultFilterCap);

nlohmann::json to_json(const FiniteMtlAlgebra& alg, const FilterClassification& c);
nlohmann::json to_json(const FiniteMtlAlgebra& alg, const DecompositionReport& r);

}  // namespace mtlsoft

#endif  // MTLSOFT_FILTERS_HPP
