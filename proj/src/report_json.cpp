#include "hopwheel/report_json.hpp"

namespace hopwheel {

using nlohmann::json;

json metrics_to_json(const std::vector<JumpMetrics>& metrics,
                     const std::vector<SimEvent>& events) {
    json jumps = json::array();
    for (const JumpMetrics& m : metrics) {
        jumps.push_back({{"takeoff_time", m.takeoff_time},
                         {"landing_time", m.landing_time},
                         {"apex_height_m", m.apex_height_m},
                         {"apex_height_bl", m.apex_height_bl},
                         {"horizontal_span_m", m.horizontal_span_m},
                         {"horizontal_span_bl", m.horizontal_span_bl},
                         {"com_launch_velocity",
                          {m.com_launch_velocity[0], m.com_launch_velocity[1]}},
                         {"jump_classified", m.jump_classified}});
    }
    json evs = json::array();
    for (const SimEvent& e : events)
        evs.push_back({{"t", e.t}, {"kind", to_string(e.kind)}});
    return json{{"jumps", jumps}, {"events", evs}};
}

json diagnostics_to_json(const DiagnosticsReport& r) {
    json slips = json::array();
    for (const SlipInterval& s : r.slip_intervals)
        slips.push_back({{"t_start", s.t_start}, {"t_end", s.t_end},
                         {"max_ratio", s.max_ratio}});
    return json{{"max_energy_residual", r.max_energy_residual},
                {"max_rolling_constraint_residual", r.max_rolling_constraint_residual},
                {"slip_intervals", slips},
                {"flight_parabola_residual", r.flight_parabola_residual},
                {"flight_ang_momentum_drift", r.flight_ang_momentum_drift}};
}

}  // namespace hopwheel
