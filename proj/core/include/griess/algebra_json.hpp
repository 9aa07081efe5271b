#pragma once

#include <nlohmann/json.hpp>

#include "griess/structure_algebra.hpp"

namespace griess {

/// {"basis": [...], "products": [[i, j, [[k, "p/q"], ...]], ...], "gram": [[...]]}
/// Only pairs with i <= j and a nonzero product are listed.
nlohmann::json to_json(const StructureAlgebra& algebra);
/// Inverse of to_json. Throws InvalidArgument on malformed input.
AlgebraPtr algebra_from_json(const nlohmann::json& j);

/// [[k, "p/q"], ...] over the nonzero coefficients.
nlohmann::json to_json(const SparseVector& v);
nlohmann::json to_json(const AlgebraElement& e);
SparseVector sparse_from_json(const nlohmann::json& j);

}  // namespace griess
