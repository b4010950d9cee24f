#pragma once

#include <vector>

#include <json.hpp>

#include "hopwheel/diagnostics.hpp"
#include "hopwheel/metrics.hpp"
#include "hopwheel/trajectory.hpp"

namespace hopwheel {

/// Jump metrics plus the event log, as written to metrics.json.
nlohmann::json metrics_to_json(const std::vector<JumpMetrics>& metrics,
                               const std::vector<SimEvent>& events);

nlohmann::json diagnostics_to_json(const DiagnosticsReport& report);

}  // namespace hopwheel
