#include "hopwheel/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <ostream>
#include <thread>

#include "hopwheel/diagnostics.hpp"
#include "hopwheel/scenario.hpp"
#include "hopwheel/simulator.hpp"

namespace hopwheel {

using nlohmann::json;

std::vector<SweepAxis> parse_sweep_axes(const std::vector<std::string>& args) {
    std::vector<SweepAxis> axes;
    for (const std::string& arg : args) {
        const auto eq = arg.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("", "sweep axis must have the form key.path=v1,v2,...: " + arg);
        SweepAxis axis;
        axis.path = arg.substr(0, eq);
        std::size_t start = eq + 1;
        while (start <= arg.size()) {
            const auto comma = arg.find(',', start);
            const std::string raw =
                arg.substr(start, comma == std::string::npos ? comma : comma - start);
            if (!raw.empty()) {
                json v = json::parse(raw, nullptr, false);
                if (v.is_discarded()) v = raw;
                axis.values.push_back(v);
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (axis.values.empty())
            throw ConfigError(axis.path, "sweep axis has no values");
        axes.push_back(std::move(axis));
    }
    return axes;
}

std::vector<SweepCell> run_sweep(const json& base, const std::vector<SweepAxis>& axes,
                                 unsigned jobs) {
    std::size_t total = axes.empty() ? 0 : 1;
    for (const SweepAxis& axis : axes) total *= axis.values.size();
    if (total == 0) throw ConfigError("", "sweep grid is empty");

    std::vector<SweepCell> cells(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        cells[idx].index = idx;
        std::size_t rem = idx;
        for (const SweepAxis& axis : axes) {
            cells[idx].values.push_back(axis.values[rem % axis.values.size()]);
            rem /= axis.values.size();
        }
    }

    auto run_cell = [&](SweepCell& cell) {
        try {
            json doc = base;
            for (std::size_t a = 0; a < axes.size(); ++a)
                apply_override(doc, axes[a].path + "=" + cell.values[a].dump());
            const Scenario sc = parse_scenario(doc);
            const Simulator sim(sc.robot, sc.sim, sc.profile, sc.controller);
            const TrajectoryRecord record = sim.run(Simulator::rest_state());
            const auto metrics = jump_metrics(record, sc.robot);
            cell.jump_count = metrics.size();
            if (!metrics.empty()) cell.first_jump = metrics.front();
            cell.ok = true;
        } catch (const std::exception& e) {
            cell.ok = false;
            cell.error = e.what();
        }
    };

    const unsigned workers =
        std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(total)));
    if (workers == 1) {
        for (SweepCell& cell : cells) run_cell(cell);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1))
                    run_cell(cells[i]);
            });
        for (std::thread& th : pool) th.join();
    }
    return cells;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const std::vector<SweepAxis>& axes,
                     const std::vector<SweepCell>& cells) {
    os << "cell";
    for (const SweepAxis& axis : axes) os << ',' << csv_quote(axis.path);
    os << ",status,error,jump_count,takeoff_time,landing_time,apex_height_m,"
          "apex_height_bl,horizontal_span_m,horizontal_span_bl\n";
    for (const SweepCell& cell : cells) {
        os << cell.index;
        for (const json& v : cell.values)
            os << ',' << csv_quote(v.is_string() ? v.get<std::string>() : v.dump());
        os << ',' << (cell.ok ? "ok" : "error") << ',' << csv_quote(cell.error) << ','
           << cell.jump_count;
        if (cell.first_jump) {
            const JumpMetrics& m = *cell.first_jump;
            os << ',' << fmt(m.takeoff_time) << ',' << fmt(m.landing_time) << ','
               << fmt(m.apex_height_m) << ',' << fmt(m.apex_height_bl) << ','
               << fmt(m.horizontal_span_m) << ',' << fmt(m.horizontal_span_bl);
        } else {
            os << ",,,,,,";
        }
        os << '\n';
    }
}

}  // namespace hopwheel
