#pragma once

#include "json.hpp"

#include "hnc/heisenberg.hpp"

namespace hnc {

using json = nlohmann::json;

json to_json(const GroupElement& g);
GroupElement group_element_from_json(const json& j);

json to_json(const Gaussian& z);
json to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const json& j);

json to_json(const AlgebraMatrix& m);
// Accepts either a single element or {"matrix": [[element,...],...]}.
AlgebraMatrix algebra_matrix_from_json(const json& j);

json to_json(const Eigen::MatrixXcd& m);

}  // namespace hnc
