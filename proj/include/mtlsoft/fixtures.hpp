#ifndef MTLSOFT_FIXTURES_HPP
#define MTLSOFT_FIXTURES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mtlsoft/algebra.hpp"

namespace mtlsoft::fixtures {

// Built-in algebras:
//   a1  4-element chain 0 < a < b < 1 (Boolean filter example)
//   a2  4-element chain 0 < a < b < 1 (MV-filter example)
//   a3  6-element algebra {0,a,b,c,d,1} (G-filter example, no meet/join tables)
//   b2  two-element Boolean algebra
std::vector<std::string> ids();

/// Source document of a fixture, as it would appear in a file.
std::optional<nlohmann::json> document(std::string_view id);

/// Loaded fixture; nullopt for an unknown id.
std::optional<FiniteMtlAlgebra> algebra(std::string_view id);

/// Example soft sets over (0,1] on the 1/10 grid, as piece documents
/// carrying "algebra" (fixture id) and "claim" (the filter kind every value
/// is asserted to have):
///   s1  on a1: L, {a,b,1}, empty   (Boolean)
///   s2  on a2: L, {1}, empty       (MV)
///   s3  on a3: L, {a,1}, empty     (G)
std::vector<std::string> soft_ids();
std::optional<nlohmann::json> soft_document(std::string_view id);

}  // namespace mtlsoft::fixtures

#endif  // MTLSOFT_FIXTURES_HPP
