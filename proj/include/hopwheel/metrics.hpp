#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "hopwheel/robot_params.hpp"
#include "hopwheel/trajectory.hpp"

namespace hopwheel {

/// Raised for a flight segment with fewer than two samples.
struct DegenerateSegmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-flight-segment jump summary. Heights and spans describe the hoop
/// center relative to its ground-contact height; body lengths are hoop
/// diameters (2R).
struct JumpMetrics {
    double takeoff_time = 0.0;
    double landing_time = 0.0;               ///< record end when the horizon cut the flight short
    double apex_height_m = 0.0;              ///< max hoop-center height over the flight
    double apex_height_bl = 0.0;             ///< apex_height_m / (2R)
    double horizontal_span_m = 0.0;          ///< hoop-center x displacement over the flight
    double horizontal_span_bl = 0.0;
    std::array<double, 2> com_launch_velocity{0.0, 0.0};  ///< COM velocity at release [m/s]
    bool jump_classified = false;            ///< true for a takeoff, false for a non-jump detachment
};

/// One JumpMetrics per flight segment, in takeoff order. The apex is the
/// maximum recorded hoop-center height refined by a local quadratic through
/// the neighboring samples.
std::vector<JumpMetrics> jump_metrics(const TrajectoryRecord& record,
                                      const RobotParams& params);

}  // namespace hopwheel
