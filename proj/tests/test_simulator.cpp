#include <doctest.h>

#include <cmath>

#include "hopwheel/diagnostics.hpp"
#include "hopwheel/dynamics.hpp"
#include "hopwheel/simulator.hpp"

using namespace hopwheel;

namespace {

ReferenceProfile zero_profile() {
    return ReferenceProfile({{0.0, std::numeric_limits<double>::infinity(),
                              SegmentKind::Constant, 0.0}});
}

ControllerConfig passive() {
    ControllerConfig cfg;
    cfg.kp = 0.0;  // torque identically zero
    return cfg;
}

Simulator make_sim(SimConfig cfg, ReferenceProfile profile = zero_profile(),
                   ControllerConfig ctrl = passive()) {
    return Simulator(RobotParams{}, cfg, std::move(profile), ctrl);
}

}  // namespace

TEST_CASE("rest with zero reference is a fixed point") {
    SimConfig cfg;
    cfg.t_end = 1.0;
    ControllerConfig ctrl;  // active controller, zero error at rest
    ctrl.kp = 0.5;
    const Simulator sim = make_sim(cfg, zero_profile(), ctrl);

    const StepOutcome out = sim.step(Simulator::rest_state());
    CHECK(out.events.empty());
    CHECK(std::abs(out.state.phi) < 1e-12);
    CHECK(std::abs(out.state.theta) < 1e-12);
    CHECK(std::abs(out.state.dphi) < 1e-12);
    CHECK(std::abs(out.state.dtheta) < 1e-12);
    CHECK(out.state.y == 0.0);

    const TrajectoryRecord rec = sim.run(Simulator::rest_state());
    CHECK(rec.events.empty());
    CHECK(rec.samples.back().phase == Phase::Rolling);
    CHECK(std::abs(rec.samples.back().x) < 1e-12);
}

TEST_CASE("free-fall flight step: RK4 is exact for constant acceleration") {
    SimConfig cfg;
    const Simulator sim = make_sim(cfg);
    SimState s;
    s.phase = Phase::Flight;
    s.y = 1.0;
    const StepOutcome out = sim.step(s);
    CHECK(out.events.empty());
    CHECK(out.state.dy == doctest::Approx(-9.81 * cfg.dt).epsilon(1e-12));
    CHECK(out.state.y == doctest::Approx(1.0 - 0.5 * 9.81 * cfg.dt * cfg.dt).epsilon(1e-15));
    CHECK(out.state.dtheta == 0.0);
    CHECK(out.state.dx == 0.0);
}

TEST_CASE("fourth-order convergence on a smooth rolling interval") {
    // Passive rolling with the pendulum released from 1 rad; Richardson
    // comparison of the trajectory at t = 2 s against a dt/8 reference.
    auto final_state = [](double dt) {
        SimConfig cfg;
        cfg.dt = dt;
        cfg.t_end = 2.0;
        const Simulator sim = make_sim(cfg);
        SimState init;
        init.theta = 1.0;
        const TrajectoryRecord rec = sim.run(init);
        REQUIRE(rec.events.empty());
        return rec.samples.back();
    };

    const TrajectorySample ref = final_state(1.25e-4);
    auto err = [&](const TrajectorySample& s) {
        return std::sqrt(std::pow(s.phi - ref.phi, 2) + std::pow(s.theta - ref.theta, 2) +
                         std::pow(s.dphi - ref.dphi, 2) + std::pow(s.dtheta - ref.dtheta, 2));
    };
    const double e1 = err(final_state(1e-3));
    const double e2 = err(final_state(5e-4));
    CHECK(e1 > 1e-12);  // above float noise, below eyeball level
    const double ratio = e1 / e2;
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
}

TEST_CASE("takeoff at the analytic normal-force threshold") {
    const RobotParams p;
    const double threshold = std::sqrt(p.total_mass() * p.g / (p.m_p * p.l_p));

    SimConfig cfg;
    cfg.t_end = 0.5;

    SUBCASE("fast pendulum approaching the top from below: a jump") {
        SimState s;
        s.theta = M_PI - 0.01;
        s.dtheta = threshold * 1.02;
        const TrajectoryRecord rec = make_sim(cfg).run(s);
        REQUIRE(!rec.events.empty());
        CHECK(rec.events.front().kind == EventKind::Takeoff);
        CHECK(rec.events.front().t == 0.0);
    }

    SUBCASE("fast pendulum past the top: released but not a jump") {
        SimState s;
        s.theta = M_PI + 0.01;
        s.dtheta = threshold * 1.02;
        const TrajectoryRecord rec = make_sim(cfg).run(s);
        REQUIRE(!rec.events.empty());
        CHECK(rec.events.front().kind == EventKind::NonJumpDetachment);
    }

    SUBCASE("slow pendulum: no event over the whole horizon") {
        SimState s;
        s.theta = 0.0;
        s.dtheta = 0.5 * threshold;  // contact force cannot reach zero
        const TrajectoryRecord rec = make_sim(cfg).run(s);
        CHECK(rec.events.empty());
        for (const auto& row : rec.samples) CHECK(row.phase == Phase::Rolling);
    }

    SUBCASE("max_events guard") {
        SimState s;
        s.theta = M_PI - 0.01;
        s.dtheta = threshold * 1.02;
        SimConfig strict = cfg;
        strict.max_events = 0;
        CHECK_THROWS_AS(make_sim(strict).run(s), RunawayChatterError);
    }
}

TEST_CASE("landing time matches the closed-form ballistic solution") {
    // Quiet pendulum: the hoop center itself follows the projectile
    // parabola, so the landing time has a closed form.
    SimConfig cfg;
    cfg.t_end = 2.0;
    const Simulator sim = make_sim(cfg);
    SimState s;
    s.phase = Phase::Flight;
    s.y = 0.3;
    s.dy = 1.0;
    s.dx = 0.7;

    const TrajectoryRecord rec = sim.run(s);
    REQUIRE(rec.events.size() == 1);
    const SimEvent& ev = rec.events.front();
    CHECK(ev.kind == EventKind::Landing);

    const double g = 9.81;
    const double t_star = (1.0 + std::sqrt(1.0 + 2.0 * g * 0.3)) / g;
    CHECK(std::abs(ev.t - t_star) < 1e-9);
    CHECK(std::abs(ev.state.y) < 1e-9);

    CHECK(rec.samples.back().phase == Phase::Landed);
    CHECK(rec.samples.back().t == ev.t);  // the run ends at the first landing
    CHECK(ev.state.x == doctest::Approx(0.7 * t_star).epsilon(1e-9));
}

TEST_CASE("grazing contact lands immediately") {
    SimConfig cfg;
    cfg.t_end = 1.0;
    const Simulator sim = make_sim(cfg);
    SimState s;
    s.phase = Phase::Flight;  // y = 0, dy = 0, accelerating downward
    const TrajectoryRecord rec = sim.run(s);
    REQUIRE(rec.events.size() == 1);
    CHECK(rec.events.front().kind == EventKind::Landing);
    CHECK(rec.events.front().t <= 1e-6);
    CHECK(rec.samples.back().phase == Phase::Landed);
}

TEST_CASE("flight through the horizon ends without an event") {
    SimConfig cfg;
    cfg.t_end = 0.2;
    const Simulator sim = make_sim(cfg);
    SimState s;
    s.phase = Phase::Flight;
    s.y = 5.0;
    const TrajectoryRecord rec = sim.run(s);
    CHECK(rec.events.empty());
    CHECK(rec.samples.back().t == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(rec.samples.back().phase == Phase::Flight);
}

TEST_CASE("vertical scenario: determinism, phase soundness, event continuity") {
    const SimConfig cfg;  // dt 1e-4, t_end 8
    ControllerConfig ctrl;
    const Simulator sim(RobotParams{}, cfg, builtin_profiles().at("vertical"), ctrl);

    const TrajectoryRecord a = sim.run(Simulator::rest_state());
    const TrajectoryRecord b = sim.run(Simulator::rest_state());

    SUBCASE("bit-identical repetition") {
        REQUIRE(a.samples.size() == b.samples.size());
        REQUIRE(a.events.size() == b.events.size());
        for (std::size_t i = 0; i < a.samples.size(); ++i) {
            CHECK(a.samples[i].t == b.samples[i].t);
            CHECK(a.samples[i].phi == b.samples[i].phi);
            CHECK(a.samples[i].theta == b.samples[i].theta);
            CHECK(a.samples[i].dtheta == b.samples[i].dtheta);
            CHECK(a.samples[i].work == b.samples[i].work);
        }
        for (std::size_t i = 0; i < a.events.size(); ++i) {
            CHECK(a.events[i].t == b.events[i].t);
            CHECK(a.events[i].kind == b.events[i].kind);
        }
    }

    SUBCASE("rows strictly increasing; rolling constraints honored; flight rows carry no contact forces") {
        for (std::size_t i = 1; i < a.samples.size(); ++i)
            CHECK(a.samples[i].t > a.samples[i - 1].t);
        for (const auto& row : a.samples) {
            if (row.phase == Phase::Rolling) {
                CHECK(std::abs(row.x - sim.params().R * row.phi) <= cfg.constraint_tol);
                CHECK(std::abs(row.y) <= cfg.constraint_tol);
            } else {
                CHECK(row.lambda1 == 0.0);
                CHECK(row.lambda2 == 0.0);
            }
        }
    }

    SUBCASE("takeoff then landing, with a continuous handover") {
        REQUIRE(a.events.size() == 2);
        CHECK(a.events[0].kind == EventKind::Takeoff);
        CHECK(a.events[1].kind == EventKind::Landing);

        // locate the takeoff row and its predecessor
        std::size_t idx = 0;
        while (idx < a.samples.size() && a.samples[idx].t < a.events[0].t) ++idx;
        REQUIRE(idx > 0);
        REQUIRE(idx < a.samples.size());
        const auto& before = a.samples[idx - 1];
        const auto& at = a.samples[idx];
        const double span = at.t - before.t;
        CHECK(span <= cfg.dt + 1e-12);
        // no impulsive change: velocity moves only by acceleration * dt scale
        CHECK(std::abs(at.dtheta - before.dtheta) < 5000.0 * span + 1e-9);
        CHECK(std::abs(at.dphi - before.dphi) < 1000.0 * span + 1e-9);
        CHECK(std::abs(at.theta - before.theta) < 300.0 * span + 1e-9);
        CHECK(at.y == 0.0);
        CHECK(at.dy == 0.0);

        // the normal force decays to zero at the takeoff row
        CHECK(std::abs(before.lambda2) < 1.0);
    }

    SUBCASE("energy bookkeeping stays within budget") {
        const DiagnosticsReport diag = diagnostics(a, sim.params(), sim.params().mu);
        const double duration = a.samples.back().t - a.samples.front().t;
        CHECK(diag.max_energy_residual <= 1e-5 * duration);
        CHECK(diag.max_rolling_constraint_residual <= cfg.constraint_tol);
    }
}

TEST_CASE("invalid initial states are rejected") {
    const Simulator sim = make_sim(SimConfig{});
    SimState s;
    s.phase = Phase::Landed;
    CHECK_THROWS_AS(sim.run(s), std::invalid_argument);

    SimState rolling_off_ground;
    rolling_off_ground.y = 0.5;  // rolling but not in contact
    CHECK_THROWS_AS(sim.run(rolling_off_ground), std::invalid_argument);

    SimState nan_state;
    nan_state.dtheta = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(sim.run(nan_state), std::invalid_argument);
}
