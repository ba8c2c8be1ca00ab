#pragma once

#include "minifab/factory.hpp"

#include <string>
#include <vector>

namespace minifab {

/// Writes scenarios as diffable structured text: one "[name]" block of
/// key=value lines per scenario.
std::string scenario_file_text(const std::vector<ScenarioConfig>& scenarios);
void write_scenario_file(const std::string& path, const std::vector<ScenarioConfig>& scenarios);

/// Parses a scenario file; every scenario is validated.
std::vector<ScenarioConfig> read_scenario_file(const std::string& path);

/// Keeps the scenarios matching every "key=value" filter. Supported
/// keys: repair, pattern, pa, pb, tw, stages, name.
std::vector<ScenarioConfig> apply_filters(std::vector<ScenarioConfig> scenarios,
                                          const std::vector<std::string>& filters);

} // namespace minifab
