#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "turncue/config.hpp"
#include "turncue/scenario.hpp"
#include "turncue/study.hpp"

namespace turncue {

/// Everything a config file can describe. Sections: [lights], [audio],
/// [session], [scenario], [agent], [plan]. See configs/README.md for keys.
struct ConfigBundle {
    GuidanceConfig guidance;
    GazeAgentModel agent;
    std::optional<ScenarioScript> scenario;  // present iff [scenario] appears
    std::optional<StudyPlan> plan;           // present iff [plan] appears
};

/// Strict: unknown sections or keys are rejected. Throws ParseError (with a
/// line number) for syntax problems and ConfigError / ValidationError for
/// values outside their constraints. An empty document yields all defaults.
ConfigBundle parse_config(std::string_view text);

/// Throws IoError if the file cannot be read.
ConfigBundle load_config_file(const std::filesystem::path& path);

}  // namespace turncue
