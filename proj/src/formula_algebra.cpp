#include "mtlsoft/formula_algebra.hpp"

#include <algorithm>
#include <random>

namespace mtlsoft {

using Value = FormulaAlgebra::Value;

std::size_t SampledReport::count(const std::string& axiom) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [&](const SampledViolation& v) { return v.axiom == axiom; }));
}

SampledReport check_sampled(const FormulaAlgebra& alg, std::span<const Value> samples) {
  SampledReport report;
  report.samples = samples.size();
  auto fail = [&](bool holds, const char* axiom, std::vector<Value> values) {
    if (!holds) report.violations.push_back({axiom, std::move(values)});
  };
  const Value one(1);
  for (Value x : samples) {
    fail(alg.prod(x, one) == x, "unit", {x});
    for (Value y : samples) {
      fail(alg.prod(x, y) == alg.prod(y, x), "comm", {x, y});
      fail(std::max(alg.res(x, y), alg.res(y, x)) == one, "prelinearity", {x, y});
      for (Value z : samples) {
        fail(alg.prod(alg.prod(x, y), z) == alg.prod(x, alg.prod(y, z)), "assoc", {x, y, z});
        fail(!(x <= y) || alg.prod(x, z) <= alg.prod(y, z), "isotone", {x, y, z});
        fail((alg.prod(x, y) <= z) == (x <= alg.res(y, z)), "adjunction", {x, y, z});
      }
    }
  }
  return report;
}

std::vector<Value> sample_points(std::uint64_t seed, std::size_t count, long long max_den) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> den_dist(1, max_den);
  std::vector<Value> out{Value(0), Value(1, 2), Value(1)};
  for (std::size_t i = 0; i < count; ++i) {
    const long long den = den_dist(rng);
    out.emplace_back(std::uniform_int_distribution<long long>(0, den)(rng), den);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(SymbolicSubset s, Value x) {
  switch (s) {
    case SymbolicSubset::All: return true;
    case SymbolicSubset::TopOnly: return x == Value(1);
    case SymbolicSubset::Empty: return false;
  }
  return false;
}

bool is_filter_on_samples(const FormulaAlgebra& alg, SymbolicSubset s, std::span<const Value> samples) {
  if (s == SymbolicSubset::Empty) return true;
  if (!contains(s, Value(1))) return false;
  for (Value x : samples) {
    if (!contains(s, x)) continue;
    for (Value y : samples) {
      if (contains(s, y) && !contains(s, alg.prod(x, y))) return false;
      if (x <= y && !contains(s, y)) return false;
      if (contains(s, alg.res(x, y)) && !contains(s, y)) return false;
    }
  }
  return true;
}

std::vector<SymbolicPiece> example_soft_set(bool as_printed) {
  const UnitRational middle_end = as_printed ? UnitRational(3, 5) : UnitRational(4, 5);
  return {{ParameterInterval::make({0, 1}, {1, 2}), SymbolicSubset::All},
          {ParameterInterval::make({1, 2}, middle_end), SymbolicSubset::TopOnly},
          {ParameterInterval::make({4, 5}, {1, 1}), SymbolicSubset::Empty}};
}

SampledSoftVerdict classify_sampled_soft(const FormulaAlgebra& alg, const std::vector<SymbolicPiece>& pieces,
                                         std::span<const Value> samples) {
  SampledSoftVerdict verdict;
  std::vector<ParameterInterval> ranges;
  for (const auto& p : pieces) ranges.push_back(p.range);
  try {
    validate_tiling(ParameterInterval::make({0, 1}, {1, 1}), ranges);
  } catch (const IncompleteSoftSet& e) {
    verdict.error = e.what();
    return verdict;
  }
  verdict.total = true;
  verdict.filteristic = std::all_of(pieces.begin(), pieces.end(),
                                    [&](const SymbolicPiece& p) { return is_filter_on_samples(alg, p.value, samples); });
  return verdict;
}

}  // namespace mtlsoft
