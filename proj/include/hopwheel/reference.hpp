#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

namespace hopwheel {

enum class SegmentKind { Ramp, Constant };

/// One piece of a reference schedule. A constant segment outputs `value`
/// [rad/s]; a ramp outputs value·(t - t_start), i.e. `value` is the slope
/// [rad/s²] and the ramp starts from zero at the segment start.
struct ProfileSegment {
    double t_start = 0.0;
    double t_end = std::numeric_limits<double>::infinity();
    SegmentKind kind = SegmentKind::Constant;
    double value = 0.0;

    double value_at(double t) const {
        return kind == SegmentKind::Ramp ? value * (t - t_start) : value;
    }
    /// Value held after the segment (and after the whole profile, for the
    /// last segment).
    double end_value() const { return value_at(t_end); }
};

/// Piecewise schedule for the reference relative angular velocity
/// psi_dot_ref(t). Segments are contiguous and start at t = 0; boundary
/// instants resolve to the later segment (right-continuous evaluation).
/// Past the end of the last segment the final value is held, so the
/// profile is defined for all t >= 0.
class ReferenceProfile {
public:
    ReferenceProfile() = default;

    /// Validates contiguity; throws std::invalid_argument on a malformed
    /// segment list.
    explicit ReferenceProfile(std::vector<ProfileSegment> segments);

    double value_at(double t) const;

    const std::vector<ProfileSegment>& segments() const { return segments_; }

private:
    std::vector<ProfileSegment> segments_;  // empty means identically zero
};

/// The two reference schedules used by the jump scenarios:
///  - "vertical":   ramp at -2 rad/s² until t=5, -40 rad/s swing-up until
///                  t=5.2, then +200 rad/s held;
///  - "horizontal": ramp at -6.22 rad/s² until t=3.75, then -150 rad/s
///                  until t=4.75 and held beyond.
/// Negative reference values drive rolling in +x.
const std::map<std::string, ReferenceProfile>& builtin_profiles();

}  // namespace hopwheel
