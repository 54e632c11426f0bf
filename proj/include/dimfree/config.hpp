#pragma once

// JSON config schemas for the CLI: systems, linear systems and schedules,
// tensor fields, and docking/switching scenarios.

#include <optional>
#include <string>

#include <json.hpp>

#include "dimfree/dvds.hpp"
#include "dimfree/linsys.hpp"
#include "dimfree/tensor.hpp"

namespace dimfree {

using Json = nlohmann::json;

Json load_json_file(const std::string& path);

// Bracketed comma list, e.g. "[1, 0, -1]".
Vector parse_vector_literal(const std::string& text);

Vector vec_from_json(const Json& j);
Matrix mat_from_json(const Json& j);

// Rejects keys outside the allowed set (typo protection).
void require_keys(const Json& j, std::initializer_list<const char*> allowed,
                  const std::string& context);

// {"dim": m, "f": [exprs], "input_dim": p, "u": [exprs of t], "outputs": [...]}
OmegaSystem system_from_json(const Json& j);
InputFn input_from_json(const Json& j);  // reads optional "u"

// {"A": [[..]], "B": .., "C": ..}
LinearStage linear_from_json(const Json& j);
// [{"when": .., "A": .., ..}, ..]
VaryingLinearSystem schedule_from_json(const Json& j);

// {"dim": m, "r": .., "s": .., "gamma": [[expr, ..], ..]}
TensorField tensor_from_json(const Json& j);
QuadForm quadform_from_json(const Json& j);
std::vector<Vector> points_from_json(const Json& j, int dim);  // optional "points"

DockingScenario scenario_from_json(const Json& j);

struct SwitchConfig {
  OmegaSystem sys1, sys2;
  DfVector x0;
  double T = 1, t_end = 2, dt = 1e-3;
  std::optional<SteeringSpec> steering;
  std::optional<DfVector> z0;
};

SwitchConfig switch_from_json(const Json& j);

}  // namespace dimfree
