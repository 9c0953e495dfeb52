#pragma once

#include <nlohmann/json.hpp>

#include <Eigen/Core>

#include <string>

namespace inclab::cli {

using Json = nlohmann::ordered_json;

/// Serializes with insertion-ordered keys, two-space indent (or a single line
/// when indent < 0) and every floating value written with 17 significant
/// digits, so output is byte-identical across runs.
std::string dump(const Json& j, int indent = 2);

Json to_json(const Eigen::MatrixXd& m);
Json to_json(const Eigen::VectorXd& v);

/// Sets obj[name] = value and obj[name + "_tol"] = tol.
void put(Json& obj, const std::string& name, const Json& value, double tol);

}  // namespace inclab::cli
