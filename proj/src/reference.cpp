#include "hopwheel/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace hopwheel {

namespace {
constexpr double kJoinTol = 1e-12;
}

ReferenceProfile::ReferenceProfile(std::vector<ProfileSegment> segments)
    : segments_(std::move(segments)) {
    if (segments_.empty())
        throw std::invalid_argument("profile must contain at least one segment");
    if (std::abs(segments_.front().t_start) > kJoinTol)
        throw std::invalid_argument("profile must start at t = 0");
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const auto& seg = segments_[i];
        if (!(seg.t_end > seg.t_start))
            throw std::invalid_argument("profile segment must have t_end > t_start");
        if (!std::isfinite(seg.t_start))
            throw std::invalid_argument("profile segment t_start must be finite");
        if (!std::isfinite(seg.value))
            throw std::invalid_argument("profile segment value must be finite");
        if (std::isinf(seg.t_end)) {
            if (i + 1 != segments_.size())
                throw std::invalid_argument("only the last profile segment may be unbounded");
            if (seg.kind == SegmentKind::Ramp)
                throw std::invalid_argument("an unbounded profile segment must be constant");
        }
        if (i + 1 < segments_.size() &&
            std::abs(segments_[i + 1].t_start - seg.t_end) > kJoinTol)
            throw std::invalid_argument("profile segments must be contiguous");
    }
}

double ReferenceProfile::value_at(double t) const {
    if (segments_.empty()) return 0.0;
    if (t <= segments_.front().t_start) return segments_.front().value_at(segments_.front().t_start);
    // Hold the terminal value once past the last segment.
    if (t >= segments_.back().t_end) return segments_.back().end_value();
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
        if (t >= it->t_start) return it->value_at(t);
    }
    return segments_.front().value_at(t);
}

const std::map<std::string, ReferenceProfile>& builtin_profiles() {
    static const std::map<std::string, ReferenceProfile> profiles = [] {
        const double inf = std::numeric_limits<double>::infinity();
        std::map<std::string, ReferenceProfile> m;
        m.emplace("vertical",
                  ReferenceProfile({{0.0, 5.0, SegmentKind::Ramp, -2.0},
                                    {5.0, 5.2, SegmentKind::Constant, -40.0},
                                    {5.2, inf, SegmentKind::Constant, 200.0}}));
        m.emplace("horizontal",
                  ReferenceProfile({{0.0, 3.75, SegmentKind::Ramp, -6.22},
                                    {3.75, 4.75, SegmentKind::Constant, -150.0}}));
        return m;
    }();
    return profiles;
}

}  // namespace hopwheel
