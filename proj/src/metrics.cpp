#include "hopwheel/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "hopwheel/dynamics.hpp"

namespace hopwheel {

namespace {

// Quadratic through three (t, y) points (unequal spacing allowed); returns
// the extremum value if it is a maximum inside [t0, t2], else the middle y.
double refine_apex(double t0, double y0, double t1, double y1, double t2, double y2) {
    const double d01 = (y1 - y0) / (t1 - t0);
    const double d12 = (y2 - y1) / (t2 - t1);
    const double a = (d12 - d01) / (t2 - t0);
    if (!(a < 0.0)) return y1;
    // Newton form: y = y1 + d12 (t - t1) + a (t - t1)(t - t2) around t1.
    const double b = d12 + a * (t1 - t2);  // dy/dt at t1
    const double t_star = t1 - b / (2.0 * a);
    if (t_star < t0 || t_star > t2) return y1;
    return y1 - b * b / (4.0 * a);
}

}  // namespace

std::vector<JumpMetrics> jump_metrics(const TrajectoryRecord& record,
                                      const RobotParams& params) {
    std::vector<JumpMetrics> out;
    const auto segments = flight_segments(record);
    const auto& samples = record.samples;

    for (const FlightSegment& seg : segments) {
        if (seg.last <= seg.first)
            throw DegenerateSegmentError("flight segment with a single sample");

        JumpMetrics m;
        const TrajectorySample& start = samples[seg.first];
        const TrajectorySample& end = samples[seg.last];
        m.takeoff_time = start.t;
        m.landing_time = end.t;

        std::size_t imax = seg.first;
        for (std::size_t i = seg.first; i <= seg.last; ++i)
            if (samples[i].y > samples[imax].y) imax = i;
        double apex = samples[imax].y;
        if (imax > seg.first && imax < seg.last)
            apex = refine_apex(samples[imax - 1].t, samples[imax - 1].y,
                               samples[imax].t, samples[imax].y,
                               samples[imax + 1].t, samples[imax + 1].y);
        m.apex_height_m = apex;
        m.apex_height_bl = apex / params.body_length();

        m.horizontal_span_m = end.x - start.x;
        m.horizontal_span_bl = m.horizontal_span_m / params.body_length();

        const ComKinematics com = com_kinematics(params, start.state());
        m.com_launch_velocity = {com.dx, com.dy};

        m.jump_classified = seg.takeoff_event != FlightSegment::npos &&
                            record.events[seg.takeoff_event].kind == EventKind::Takeoff;
        out.push_back(m);
    }
    return out;
}

}  // namespace hopwheel
