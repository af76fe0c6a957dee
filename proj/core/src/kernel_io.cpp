// Copyright 2026 The psigraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>
#include <vector>

#include "psigraph/error.hpp"
#include "psigraph/kernels.hpp"

namespace psigraph::kernels {
namespace {

double NumberField(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw InvalidInput(std::string("kernel JSON field '") + key + "' must be a number");
  }
  return j[key].get<double>();
}

}  // namespace

Kernel kernel_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw InvalidInput("kernel JSON needs a string 'type'");
  }
  const std::string type = j["type"].get<std::string>();
  if (type == "constant") return ClosedFormKernel::Constant(NumberField(j, "p"));
  if (type == "half") return ClosedFormKernel::Half();
  if (type != "step") throw InvalidInput("unknown kernel type '" + type + "'");

  if (!j.contains("weights") || !j["weights"].is_array() || !j.contains("values") ||
      !j["values"].is_array()) {
    throw InvalidInput("step kernel JSON needs 'weights' and 'values' arrays");
  }
  std::vector<double> weights;
  for (const auto& w : j["weights"]) {
    if (!w.is_number()) throw InvalidInput("step kernel weights must be numbers");
    weights.push_back(w.get<double>());
  }
  const auto b = static_cast<Eigen::Index>(weights.size());
  const auto& rows = j["values"];
  if (static_cast<Eigen::Index>(rows.size()) != b) throw InvalidInput("step kernel values must be square");
  Eigen::MatrixXd values(b, b);
  for (Eigen::Index i = 0; i < b; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != b) {
      throw InvalidInput("step kernel values must be square");
    }
    for (Eigen::Index k = 0; k < b; ++k) {
      const auto& v = row[static_cast<std::size_t>(k)];
      if (!v.is_number()) throw InvalidInput("step kernel values must be numbers");
      values(i, k) = v.get<double>();
    }
  }
  return StepKernel(std::move(weights), std::move(values));
}

nlohmann::json to_json(const Kernel& w) {
  if (const auto* closed = std::get_if<ClosedFormKernel>(&w)) {
    if (closed->kind == ClosedFormKernel::Kind::kHalf) return {{"type", "half"}};
    return {{"type", "constant"}, {"p", closed->p}};
  }
  const auto& step = std::get<StepKernel>(w);
  nlohmann::json values = nlohmann::json::array();
  for (int i = 0; i < step.num_blocks(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < step.num_blocks(); ++k) row.push_back(step.values()(i, k));
    values.push_back(row);
  }
  return {{"type", "step"}, {"weights", step.weights()}, {"values", values}};
}

std::string describe(const Kernel& w) {
  if (const auto* closed = std::get_if<ClosedFormKernel>(&w)) {
    if (closed->kind == ClosedFormKernel::Kind::kHalf) return "half";
    return "constant(" + std::to_string(closed->p) + ")";
  }
  return "step(" + std::to_string(std::get<StepKernel>(w).num_blocks()) + " blocks)";
}

}  // namespace psigraph::kernels
