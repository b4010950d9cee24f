// End-to-end checks of the command-line tool, driving the built binary.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const char* cli = HOPWHEEL_CLI_PATH;

int run_cmd(const std::string& args) {
    const int rc = std::system((std::string(cli) + " " + args).c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("run writes trajectory, metrics and diagnostics") {
    TempDir dir("hopwheel_cli_run");
    const int rc = run_cmd("run --scenario vertical --set sim.t_end=0.5 --set sim.dt=1e-3 --out " +
                           (dir.path / "out").string() + " > " + (dir.path / "stdout").string());
    CHECK(rc == 0);
    CHECK(fs::exists(dir.path / "out" / "trajectory.csv"));
    CHECK(fs::exists(dir.path / "out" / "metrics.json"));
    CHECK(fs::exists(dir.path / "out" / "diagnostics.json"));
    CHECK(slurp(dir.path / "stdout").find("jumps=") != std::string::npos);
}

TEST_CASE("config errors exit with code 2 naming the key") {
    TempDir dir("hopwheel_cli_bad");
    {
        std::ofstream os(dir.path / "bad.json");
        os << R"({"robot": {"m_o": -0.5}})";
    }
    const int rc = run_cmd("run --config " + (dir.path / "bad.json").string() + " 2> " +
                           (dir.path / "stderr").string());
    CHECK(rc == 2);
    CHECK(slurp(dir.path / "stderr").find("m_o") != std::string::npos);

    CHECK(run_cmd("run 2> /dev/null") == 2);                    // neither --config nor --scenario
    CHECK(run_cmd("run --scenario diagonal 2> /dev/null") == 2);
}

TEST_CASE("dump-config output re-parses to the identical effective config") {
    TempDir dir("hopwheel_cli_dump");
    const fs::path c1 = dir.path / "c1.json";
    const fs::path c2 = dir.path / "c2.json";
    CHECK(run_cmd("run --scenario vertical --set controller.kp=0.015 --dump-config > " +
                  c1.string()) == 0);
    CHECK(run_cmd("run --config " + c1.string() + " --dump-config > " + c2.string()) == 0);
    CHECK(slurp(c1) == slurp(c2));
    CHECK(!slurp(c1).empty());
}

TEST_CASE("sweep grid: one row per cell, deterministic order, errors contained") {
    TempDir dir("hopwheel_cli_sweep");
    const std::string base = "sweep --scenario vertical --set sim.t_end=0.2 --set sim.dt=1e-3 --out " +
                             (dir.path / "out").string();

    SUBCASE("1x1 sweep behaves like run") {
        CHECK(run_cmd(base + " --sweep controller.kp=0.01 > /dev/null") == 0);
        const std::string csv = slurp(dir.path / "out" / "sweep.csv");
        CHECK(csv.find("cell,controller.kp,status") == 0);
        CHECK(csv.find("0,0.01,ok,") != std::string::npos);
    }

    SUBCASE("grid of three cells in axis order") {
        CHECK(run_cmd(base + " --sweep controller.kp=0.005,0.01,0.02 > /dev/null") == 0);
        const std::string csv = slurp(dir.path / "out" / "sweep.csv");
        CHECK(csv.find("0,0.005,ok") != std::string::npos);
        CHECK(csv.find("1,0.01,ok") != std::string::npos);
        CHECK(csv.find("2,0.02,ok") != std::string::npos);
    }

    SUBCASE("a failing cell is recorded, the sweep still succeeds") {
        CHECK(run_cmd(base + " --sweep robot.m_o=-1,0.475 > /dev/null") == 0);
        const std::string csv = slurp(dir.path / "out" / "sweep.csv");
        CHECK(csv.find("0,-1,error,") != std::string::npos);
        CHECK(csv.find("1,0.475,ok,") != std::string::npos);
    }

    SUBCASE("an empty grid is a config error") {
        CHECK(run_cmd(base + " 2> /dev/null") == 2);
    }
}
