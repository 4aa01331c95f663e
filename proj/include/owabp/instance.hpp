#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "owabp/family.hpp"

namespace owabp {

struct InstanceMetadata {
  std::string name;
  std::optional<std::uint64_t> seed;
  std::string provenance;

  friend bool operator==(const InstanceMetadata&, const InstanceMetadata&) = default;
};

/// A complete problem: structure, scenario costs, and a weight distribution.
struct Instance {
  ProblemFamily family;
  ScenarioMatrix scenarios;
  WeightScheme weights;
  InstanceMetadata metadata;

  WeightVector weight_vector() const { return weights.expand(scenarios.num_scenarios()); }
};

/// Checks cross-field consistency (matrix width vs element count, weight
/// scheme expandable). Individual parts validate themselves on construction.
void validate_instance(const Instance& instance);

}  // namespace owabp
