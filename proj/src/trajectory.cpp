#include "hopwheel/trajectory.hpp"

namespace hopwheel {

const char* to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Takeoff: return "takeoff";
        case EventKind::NonJumpDetachment: return "non-jump detachment";
        case EventKind::Landing: return "landing";
    }
    return "unknown";
}

std::vector<FlightSegment> flight_segments(const TrajectoryRecord& record) {
    std::vector<FlightSegment> segments;
    const auto& samples = record.samples;
    if (samples.empty()) return segments;

    auto sample_at_or_after = [&](double t) {
        std::size_t lo = 0, hi = samples.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (samples[mid].t < t) lo = mid + 1; else hi = mid;
        }
        return lo;
    };

    std::size_t open_first = FlightSegment::npos;
    std::size_t open_event = FlightSegment::npos;
    if (samples.front().phase == Phase::Flight) open_first = 0;  // record begins airborne

    for (std::size_t e = 0; e < record.events.size(); ++e) {
        const SimEvent& ev = record.events[e];
        if (ev.kind == EventKind::Landing) {
            if (open_first == FlightSegment::npos) continue;
            std::size_t idx = sample_at_or_after(ev.t);
            if (idx >= samples.size()) idx = samples.size() - 1;
            segments.push_back({open_first, idx, open_event, e});
            open_first = FlightSegment::npos;
            open_event = FlightSegment::npos;
        } else {
            open_first = sample_at_or_after(ev.t);
            open_event = e;
        }
    }
    if (open_first != FlightSegment::npos && open_first < samples.size())
        segments.push_back({open_first, samples.size() - 1, open_event, FlightSegment::npos});
    return segments;
}

}  // namespace hopwheel
