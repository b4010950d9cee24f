// Command-line front end: runs a scenario or a parameter sweep from a JSON
// configuration and writes trajectory/metrics/diagnostics files.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopwheel/csv_io.hpp"
#include "hopwheel/diagnostics.hpp"
#include "hopwheel/metrics.hpp"
#include "hopwheel/report_json.hpp"
#include "hopwheel/scenario.hpp"
#include "hopwheel/simulator.hpp"
#include "hopwheel/sweep.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hopwheel;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string scenario_name;
    std::vector<std::string> overrides;
    std::string out_dir;
};

void add_common_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "JSON configuration file");
    cmd->add_option("--scenario", opts.scenario_name,
                    "builtin scenario (vertical|horizontal)");
    cmd->add_option("--set", opts.overrides, "override, key.path=value (repeatable)");
    cmd->add_option("--out", opts.out_dir, "output directory (overrides output.dir)");
}

json base_document(const CommonOpts& opts) {
    if (opts.config_path.empty() == opts.scenario_name.empty())
        throw ConfigError("", "exactly one of --config or --scenario is required");
    json doc = opts.config_path.empty() ? builtin_scenario_json(opts.scenario_name)
                                        : load_scenario_json(opts.config_path);
    for (const std::string& o : opts.overrides) apply_override(doc, o);
    if (!opts.out_dir.empty()) apply_override(doc, "output.dir=" + opts.out_dir);
    return doc;
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << text;
}

int cmd_run(const CommonOpts& opts, bool dump_config) {
    const json doc = base_document(opts);
    const Scenario sc = parse_scenario(doc);

    if (dump_config) {
        std::cout << dump_scenario(sc).dump(2) << '\n';
        return 0;
    }

    const Simulator sim(sc.robot, sc.sim, sc.profile, sc.controller);
    const TrajectoryRecord record = sim.run(Simulator::rest_state());
    const auto metrics = jump_metrics(record, sc.robot);
    const DiagnosticsReport diag = diagnostics(record, sc.robot, sc.robot.mu);

    fs::create_directories(sc.output.dir);
    if (sc.output.trajectory_csv)
        write_trajectory_csv_file((fs::path(sc.output.dir) / "trajectory.csv").string(), record);
    if (sc.output.metrics_json)
        write_text_file(fs::path(sc.output.dir) / "metrics.json",
                        metrics_to_json(metrics, record.events).dump(2) + "\n");
    if (sc.output.diagnostics_json)
        write_text_file(fs::path(sc.output.dir) / "diagnostics.json",
                        diagnostics_to_json(diag).dump(2) + "\n");

    if (metrics.empty()) {
        std::printf("jumps=0 t_end=%.6g\n", record.samples.back().t);
    } else {
        const JumpMetrics& m = metrics.front();
        std::printf("jumps=%zu takeoff_s=%.6g apex_bl=%.6g span_bl=%.6g\n",
                    metrics.size(), m.takeoff_time, m.apex_height_bl,
                    m.horizontal_span_bl);
    }
    return 0;
}

int cmd_sweep(const CommonOpts& opts, const std::vector<std::string>& sweep_args,
              unsigned jobs) {
    const json doc = base_document(opts);
    const Scenario sc = parse_scenario(doc);  // validate the base before fanning out
    const auto axes = parse_sweep_axes(sweep_args);
    if (axes.empty()) throw ConfigError("", "sweep requires at least one --sweep axis");

    const auto cells = run_sweep(doc, axes, jobs);

    fs::create_directories(sc.output.dir);
    const fs::path out = fs::path(sc.output.dir) / "sweep.csv";
    {
        std::ofstream os(out, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + out.string() + " for writing");
        write_sweep_csv(os, axes, cells);
    }

    std::size_t ok = 0;
    for (const SweepCell& cell : cells) ok += cell.ok ? 1 : 0;
    std::printf("sweep: %zu cells, %zu ok -> %s\n", cells.size(), ok, out.string().c_str());
    return ok > 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pendulum-driven rolling/jumping wheel robot simulator"};
    app.require_subcommand(1);

    CommonOpts run_opts;
    bool dump_config = false;
    CLI::App* run_cmd = app.add_subcommand("run", "run one scenario");
    add_common_options(run_cmd, run_opts);
    run_cmd->add_flag("--dump-config", dump_config,
                      "print the effective configuration and exit");

    CommonOpts sweep_opts;
    std::vector<std::string> sweep_args;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a parameter grid");
    add_common_options(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--sweep", sweep_args,
                          "sweep axis, key.path=v1,v2,... (repeatable)");
    sweep_cmd->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
        if (run_cmd->parsed()) return cmd_run(run_opts, dump_config);
        return cmd_sweep(sweep_opts, sweep_args, jobs);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalDivergenceError& e) {
        std::cerr << "numerical divergence: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
