#ifndef MTLSOFT_SUBSET_HPP
#define MTLSOFT_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtlsoft/algebra.hpp"

namespace mtlsoft {

/// Subset of a carrier of at most 64 elements. Element i is bit i.
class CrispSubset {
 public:
  CrispSubset() = default;
  CrispSubset(std::size_t carrier, std::uint64_t mask) : n_(carrier), mask_(mask & full_mask(carrier)) {}
  CrispSubset(std::size_t carrier, std::initializer_list<Element> elements) : n_(carrier) {
    for (Element e : elements) insert(e);
  }

  static CrispSubset empty(std::size_t carrier) { return {carrier, std::uint64_t{0}}; }
  static CrispSubset full(std::size_t carrier) { return {carrier, full_mask(carrier)}; }

  std::size_t carrier_size() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool is_empty() const { return mask_ == 0; }
  bool is_full() const { return mask_ == full_mask(n_); }

  bool contains(Element e) const { return e < n_ && ((mask_ >> e) & 1U) != 0; }
  void insert(Element e) {
    if (e >= n_) throw std::out_of_range("element outside carrier");
    mask_ |= std::uint64_t{1} << e;
  }
  bool subset_of(const CrispSubset& other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (Element e = 0; e < n_; ++e) {
      if (contains(e)) out.push_back(e);
    }
    return out;
  }

  friend bool operator==(const CrispSubset&, const CrispSubset&) = default;

  /// Canonical order: by size, then by mask value.
  friend bool canonical_less(const CrispSubset& a, const CrispSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.mask_ < b.mask_;
  }

  static std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

 private:
  std::size_t n_ = 0;
  std::uint64_t mask_ = 0;
};

/// Labels in carrier order.
nlohmann::json to_json(const FiniteMtlAlgebra& alg, const CrispSubset& s);

/// "{a, b, 1}"
std::string format(const FiniteMtlAlgebra& alg, const CrispSubset& s);

/// Parses a label array (or a comma-separated label list).
CrispSubset subset_from_json(const FiniteMtlAlgebra& alg, const nlohmann::json& labels);
CrispSubset parse_subset(const FiniteMtlAlgebra& alg, const std::string& comma_separated);

}  // namespace mtlsoft

#endif  // MTLSOFT_SUBSET_HPP
