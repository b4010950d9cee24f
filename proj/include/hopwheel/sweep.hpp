#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopwheel/metrics.hpp"

namespace hopwheel {

/// One swept parameter: a config key path and the values it takes.
struct SweepAxis {
    std::string path;
    std::vector<nlohmann::json> values;
};

/// One cell of the Cartesian grid after execution.
struct SweepCell {
    std::size_t index = 0;
    std::vector<nlohmann::json> values;  ///< one value per axis
    bool ok = false;
    std::string error;
    std::size_t jump_count = 0;
    std::optional<JumpMetrics> first_jump;
};

/// Parses repeated `key.path=v1,v2,...` sweep arguments.
std::vector<SweepAxis> parse_sweep_axes(const std::vector<std::string>& args);

/// Runs the Cartesian grid of scenarios over `base`. Cells execute
/// concurrently on up to `jobs` threads; results are ordered by cell index
/// regardless of scheduling, and per-cell failures are captured in the
/// cell instead of aborting the sweep. Throws ConfigError for an empty grid.
std::vector<SweepCell> run_sweep(const nlohmann::json& base,
                                 const std::vector<SweepAxis>& axes,
                                 unsigned jobs);

/// Combined results table: one row per cell.
void write_sweep_csv(std::ostream& os, const std::vector<SweepAxis>& axes,
                     const std::vector<SweepCell>& cells);

}  // namespace hopwheel
