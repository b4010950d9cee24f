#pragma once

#include <cstddef>
#include <vector>

#include "hopwheel/state.hpp"

namespace hopwheel {

enum class EventKind { Takeoff, NonJumpDetachment, Landing };

const char* to_string(EventKind kind);

/// A localized phase transition with the state at the transition instant.
struct SimEvent {
    double t = 0.0;
    EventKind kind = EventKind::Takeoff;
    SimState state;
};

/// One recorded integration row. `work` carries the accumulated actuator
/// work integral of tau·psi_dot, integrated alongside the state; it is not
/// part of the CSV schema.
struct TrajectorySample {
    double t = 0.0;
    Phase phase = Phase::Rolling;
    double phi = 0.0, theta = 0.0, x = 0.0, y = 0.0;
    double dphi = 0.0, dtheta = 0.0, dx = 0.0, dy = 0.0;
    double tau = 0.0;
    double lambda1 = 0.0, lambda2 = 0.0;
    double x_com = 0.0, y_com = 0.0;
    double e_kin = 0.0, e_pot = 0.0;
    bool slip_flag = false;
    double work = 0.0;

    SimState state() const {
        return {t, phi, theta, x, y, dphi, dtheta, dx, dy, phase};
    }
};

struct TrajectoryRecord {
    std::vector<TrajectorySample> samples;
    std::vector<SimEvent> events;
};

/// Sample-index range [first, last] of one airborne stretch, between a
/// detachment event and the matching landing (or the end of the record).
/// takeoff_event/landing_event index into record.events; npos when the
/// segment starts with the record or runs into the horizon.
struct FlightSegment {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first = 0;
    std::size_t last = 0;
    std::size_t takeoff_event = npos;
    std::size_t landing_event = npos;
};

std::vector<FlightSegment> flight_segments(const TrajectoryRecord& record);

}  // namespace hopwheel
