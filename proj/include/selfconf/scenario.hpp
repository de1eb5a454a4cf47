#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "selfconf/centrality.hpp"
#include "selfconf/estimation.hpp"

namespace selfconf {

/// Scenario file: {"P": [[...]], "sigma2": [...], "z": [...], "name": "...",
/// "description": "..."}. "z" and the metadata are optional.
struct ScenarioFile {
  InfluenceNetwork network;
  VarianceVector sigma2;
  std::optional<SelfConfidenceProfile> z;
  std::string name;
  std::string description;
};

ScenarioFile parse_scenario(const nlohmann::json& doc);
/// Errors carry the path in their message.
ScenarioFile load_scenario(const std::filesystem::path& path);

/// Profile specs: "const:<v>", "csv:<v1,...,vn>", "random:<seed>" (uniform
/// on [0,1)^n), or a JSON array.
SelfConfidenceProfile parse_profile_spec(std::string_view spec, Index n);

SelfConfidenceProfile random_profile(Index n, std::uint64_t seed);

}  // namespace selfconf
