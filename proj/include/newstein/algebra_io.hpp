#pragma once

#include "newstein/lie_algebra.hpp"

#include <string>

namespace newstein {

// Algebra-definition document:
//   {"name": ..., "dimension": n, "labels": [...],
//    "constants": [{"i": 0, "j": 3, "terms": [{"k": 5, "coeff": "-1/2"}]}, ...]}
// Indices are 0-based and i < j. Keys are written in this order.
std::string algebra_to_json(const LieAlgebra& alg);
LieAlgebra algebra_from_json(const std::string& text);

void write_algebra_file(const std::string& path, const LieAlgebra& alg);
LieAlgebra read_algebra_file(const std::string& path);

}  // namespace newstein
