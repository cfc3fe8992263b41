#ifndef MTLSOFT_FORMULA_ALGEBRA_HPP
#define MTLSOFT_FORMULA_ALGEBRA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "mtlsoft/soft.hpp"

namespace mtlsoft {

/**
 * An algebra on the rational points of [0,1] given by formulas:
 *   x * y  = min(x, y) if x + y > cutoff, else 0
 *   x -> y = 1 if x <= y, else max(1 - x, y)
 * The carrier is infinite, so it is only ever checked pointwise on samples.
 * cutoff = 1 is the nilpotent minimum; the example as printed uses 1/2,
 * which breaks the adjunction.
 */
class FormulaAlgebra {
 public:
  using Value = boost::rational<long long>;

  explicit FormulaAlgebra(Value cutoff) : cutoff_(cutoff) {}
  static FormulaAlgebra as_printed() { return FormulaAlgebra(Value(1, 2)); }
  static FormulaAlgebra nilpotent_minimum() { return FormulaAlgebra(Value(1)); }

  Value cutoff() const { return cutoff_; }
  Value prod(Value x, Value y) const { return x + y > cutoff_ ? std::min(x, y) : Value(0); }
  Value res(Value x, Value y) const { return x <= y ? Value(1) : std::max(Value(1) - x, y); }

 private:
  Value cutoff_;
};

struct SampledViolation {
  std::string axiom;
  std::vector<FormulaAlgebra::Value> values;
};

struct SampledReport {
  std::size_t samples = 0;
  std::vector<SampledViolation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(const std::string& axiom) const;
};

/// Associativity, commutativity, isotonicity, unit, adjunction and
/// prelinearity over all pairs/triples of the samples.
SampledReport check_sampled(const FormulaAlgebra& alg, std::span<const FormulaAlgebra::Value> samples);

/// `count` seeded random draws from [0,1] with denominators up to max_den,
/// plus 0, 1/2 and 1, sorted with duplicates removed.
std::vector<FormulaAlgebra::Value> sample_points(std::uint64_t seed, std::size_t count, long long max_den);

/// Subsets of an infinite carrier that can be written down.
enum class SymbolicSubset { All, TopOnly, Empty };

bool contains(SymbolicSubset s, FormulaAlgebra::Value x);

/// Filter conditions restricted to the samples (empty counts as a filter).
bool is_filter_on_samples(const FormulaAlgebra& alg, SymbolicSubset s, std::span<const FormulaAlgebra::Value> samples);

struct SymbolicPiece {
  ParameterInterval range;
  SymbolicSubset value;
};

/// The example soft set over (0,1]: L on (0,1/2], {1} on (1/2, m], empty on
/// (4/5,1]. As printed m = 3/5, which leaves (3/5,4/5] undefined;
/// the corrected variant uses m = 4/5.
std::vector<SymbolicPiece> example_soft_set(bool as_printed);

struct SampledSoftVerdict {
  bool total = false;
  std::string error;  // tiling failure, when !total
  bool filteristic = false;
};

/// Rejects pieces that do not tile (0,1]; otherwise checks each value on samples.
SampledSoftVerdict classify_sampled_soft(const FormulaAlgebra& alg, const std::vector<SymbolicPiece>& pieces,
                                         std::span<const FormulaAlgebra::Value> samples);

}  // namespace mtlsoft

#endif  // MTLSOFT_FORMULA_ALGEBRA_HPP
