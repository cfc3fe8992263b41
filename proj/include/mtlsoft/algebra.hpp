#ifndef MTLSOFT_ALGEBRA_HPP
#define MTLSOFT_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mtlsoft {

/// Elements are identified by their position in the carrier.
using Element = std::size_t;

/// Square table of element indices, row-major.
class OperationTable {
 public:
  OperationTable() = default;
  explicit OperationTable(std::size_t n, Element fill = 0) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const { return n_; }
  Element operator()(Element x, Element y) const { return cells_[x * n_ + y]; }
  Element& at(Element x, Element y) { return cells_[x * n_ + y]; }

  friend bool operator==(const OperationTable&, const OperationTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

/// Thrown when an algebra document cannot be turned into an algebra.
class AlgebraLoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest carrier accepted by the loader (subsets are 64-bit masks).
inline constexpr std::size_t kMaxCarrier = 64;

/**
 * A finite bounded lattice with product and residuum tables.
 *
 * The order is always derived from the residuum: x <= y iff x -> y = top.
 * Meet and join are the order-theoretic inf/sup of that order; tables
 * supplied by the caller are only cross-checked. Nothing here asserts the
 * MTL axioms beyond the lattice structure; see validate_mtl().
 *
 * Immutable after construction.
 */
class FiniteMtlAlgebra {
 public:
  struct Tables {
    std::vector<std::string> labels;
    OperationTable prod;
    OperationTable res;
    std::optional<OperationTable> meet;
    std::optional<OperationTable> join;
    std::optional<Element> bottom;  // defaults to 0
    std::optional<Element> top;     // defaults to n - 1
  };

  static FiniteMtlAlgebra from_tables(Tables tables);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }
  std::optional<Element> find(std::string_view label) const;

  Element prod(Element x, Element y) const { return prod_(x, y); }
  Element res(Element x, Element y) const { return res_(x, y); }
  Element meet(Element x, Element y) const { return meet_(x, y); }
  Element join(Element x, Element y) const { return join_(x, y); }
  bool leq(Element x, Element y) const { return leq_[x * size() + y] != 0; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  /// x' = x -> 0.
  Element neg(Element x) const { return res_(x, bottom_); }

  const OperationTable& prod_table() const { return prod_; }
  const OperationTable& res_table() const { return res_; }

 private:
  FiniteMtlAlgebra() = default;

  std::vector<std::string> labels_;
  OperationTable prod_, res_, meet_, join_;
  std::vector<unsigned char> leq_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// x' = x -> 0.
inline Element negation(const FiniteMtlAlgebra& alg, Element x) { return alg.neg(x); }

/**
 * Builds an algebra from a JSON document:
 *   { "labels": [...], "prod": [[label...]...], "res": [[...]...],
 *     "meet"?: [[...]], "join"?: [[...]], "bottom"?: label, "top"?: label }
 * Throws AlgebraLoadError on malformed tables, an order that is not a
 * bounded partial order, a missing inf/sup, or inconsistent meet/join.
 */
FiniteMtlAlgebra load_algebra(const nlohmann::json& doc);

/// Inverse of load_algebra (always emits meet and join).
nlohmann::json to_json(const FiniteMtlAlgebra& alg);

struct Violation {
  std::string axiom;
  std::vector<Element> elements;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct AxiomStatus {
  std::string id;
  std::string description;
  bool passed = true;
};

/// Outcome of an exhaustive axiom scan. Violations are in scan order.
struct AxiomReport {
  std::vector<AxiomStatus> axioms;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool passed(std::string_view id) const;
  std::size_t count(std::string_view id) const;

  /// Union of two partial scans over the same axiom list.
  void merge(const AxiomReport& other);
};

/// Partial order, lattice, monoid, isotonicity, adjunction and prelinearity
/// over all pairs and triples.
AxiomReport validate_mtl(const FiniteMtlAlgebra& alg);

/// The derived residuated-lattice laws rl1..rl5 and the MTL laws mtl1..mtl4.
AxiomReport check_derived_laws(const FiniteMtlAlgebra& alg);

nlohmann::json to_json(const FiniteMtlAlgebra& alg, const AxiomReport& report);

}  // namespace mtlsoft

#endif  // MTLSOFT_ALGEBRA_HPP
