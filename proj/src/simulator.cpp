#include "hopwheel/simulator.hpp"

#include <cmath>

#include "hopwheel/dynamics.hpp"

namespace hopwheel {

namespace {

bool all_finite(const std::array<double, 9>& y) {
    for (double v : y)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace

void SimConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("dt must be a positive finite number");
    if (!(t_end > 0.0) || !std::isfinite(t_end))
        throw std::invalid_argument("t_end must be a positive finite number");
    if (!(event_time_tol > 0.0) || !(event_time_tol < dt))
        throw std::invalid_argument("event_time_tol must be positive and smaller than dt");
    if (!(constraint_tol > 0.0))
        throw std::invalid_argument("constraint_tol must be positive");
    if (max_events < 0)
        throw std::invalid_argument("max_events must be non-negative");
}

Simulator::Simulator(RobotParams params, SimConfig config, ReferenceProfile profile,
                     ControllerConfig controller)
    : params_(std::move(params)),
      config_(config),
      profile_(std::move(profile)),
      controller_(controller) {
    params_.validate();
    config_.validate();
}

SimState Simulator::rest_state() { return SimState{}; }

double Simulator::torque_at(double t, const SimState& s) const {
    return control_torque(controller_, profile_.value_at(t), s);
}

SimState Simulator::to_state(double t, const StateVec& y, Phase phase) const {
    return {t, y[0], y[1], y[2], y[3], y[4], y[5], y[6], y[7], phase};
}

void Simulator::eval_field(double t, const StateVec& y, Phase phase,
                           StateVec& dydt) const {
    const SimState s = to_state(t, y, phase);
    const double tau = torque_at(t, s);
    const Accelerations a = phase == Phase::Rolling
                                ? rolling_dynamics(params_, s, tau)
                                : flight_dynamics(params_, s, tau);
    dydt[0] = y[4];
    dydt[1] = y[5];
    dydt[2] = y[6];
    dydt[3] = y[7];
    dydt[4] = a.ddphi;
    dydt[5] = a.ddtheta;
    dydt[6] = a.ddx;
    dydt[7] = a.ddy;
    dydt[8] = tau * (y[5] - y[4]);  // actuator power tau * psi_dot
}

Simulator::StateVec Simulator::rk4_step(double t, const StateVec& y, double h,
                                        Phase phase) const {
    StateVec k1, k2, k3, k4, tmp;
    eval_field(t, y, phase, k1);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    eval_field(t + 0.5 * h, tmp, phase, k2);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    eval_field(t + 0.5 * h, tmp, phase, k3);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + h * k3[i];
    eval_field(t + h, tmp, phase, k4);
    StateVec out;
    for (std::size_t i = 0; i < y.size(); ++i)
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

double Simulator::normal_force(double t, const StateVec& y) const {
    const SimState s = to_state(t, y, Phase::Rolling);
    const double tau = torque_at(t, s);
    return constraint_forces(params_, s, rolling_dynamics(params_, s, tau)).lambda2;
}

TrajectorySample Simulator::make_sample(double t, const StateVec& y, Phase phase) const {
    const SimState s = to_state(t, y, phase);
    TrajectorySample row;
    row.t = t;
    row.phase = phase;
    row.phi = s.phi;
    row.theta = s.theta;
    row.x = s.x;
    row.y = s.y;
    row.dphi = s.dphi;
    row.dtheta = s.dtheta;
    row.dx = s.dx;
    row.dy = s.dy;
    row.tau = torque_at(t, s);
    if (phase == Phase::Rolling) {
        const ConstraintForces cf =
            constraint_forces(params_, s, rolling_dynamics(params_, s, row.tau));
        row.lambda1 = cf.lambda1;
        row.lambda2 = cf.lambda2;
        row.slip_flag = std::abs(cf.lambda1) > params_.mu * cf.lambda2;
    }
    const ComKinematics com = com_kinematics(params_, s);
    row.x_com = com.x;
    row.y_com = com.y;
    const Energy e = total_energy(params_, s);
    row.e_kin = e.kinetic;
    row.e_pot = e.potential;
    row.work = y[8];
    return row;
}

void Simulator::validate_initial(const SimState& s) const {
    const StateVec y{s.phi, s.theta, s.x, s.y, s.dphi, s.dtheta, s.dx, s.dy, 0.0};
    if (!all_finite(y) || !std::isfinite(s.t) || s.t < 0.0)
        throw std::invalid_argument("initial state must be finite with t >= 0");
    if (s.phase == Phase::Landed)
        throw std::invalid_argument("initial phase must be Rolling or Flight");
    if (s.phase == Phase::Rolling) {
        const double tol = config_.constraint_tol;
        if (std::abs(s.y) > tol || std::abs(s.dy) > tol ||
            std::abs(s.x - params_.R * s.phi) > tol ||
            std::abs(s.dx - params_.R * s.dphi) > tol)
            throw std::invalid_argument("initial rolling state violates the rolling constraints");
    }
}

bool Simulator::advance_to(Cursor& cur, double t_target, std::vector<SimEvent>& events,
                           std::vector<TrajectorySample>* rows) const {
    while (cur.t < t_target) {
        const double h = t_target - cur.t;
        const StateVec next = rk4_step(cur.t, cur.y, h, cur.phase);
        if (!all_finite(next))
            throw NumericalDivergenceError("state diverged at t = " + std::to_string(cur.t),
                                           to_state(cur.t, cur.y, cur.phase));

        // Event test on the candidate step endpoint.
        bool event_found = false;
        if (cur.phase == Phase::Rolling) {
            event_found = normal_force(cur.t + h, next) <= 0.0;
        } else if (cur.phase == Phase::Flight) {
            event_found = next[3] <= 0.0 && (cur.y[3] > 0.0 || next[7] < 0.0);
        }

        if (!event_found) {
            cur.t = t_target;  // land exactly on the grid time
            cur.y = next;
            return true;
        }

        // Bisect the substep length until the event time is bracketed within
        // event_time_tol. The lower bracket keeps the pre-event sign, the
        // upper bracket the post-event sign; the event state is taken on the
        // post-event side so the new phase starts consistently.
        double lo = 0.0, hi = h;
        StateVec y_hi = next;
        const bool rolling = cur.phase == Phase::Rolling;
        for (int iter = 0; iter < 200 && hi - lo > config_.event_time_tol; ++iter) {
            const double mid = 0.5 * (lo + hi);
            const StateVec y_mid = rk4_step(cur.t, cur.y, mid, cur.phase);
            const bool pre_event = rolling ? normal_force(cur.t + mid, y_mid) > 0.0
                                           : y_mid[3] > 0.0;
            if (pre_event) {
                lo = mid;
            } else {
                hi = mid;
                y_hi = y_mid;
            }
        }
        const double t_event = cur.t + hi;

        if (++cur.events_seen > config_.max_events)
            throw RunawayChatterError("exceeded max_events = " +
                                      std::to_string(config_.max_events));

        SimEvent ev;
        ev.t = t_event;
        if (rolling) {
            // Contact released: continuous handover into flight. Classified
            // as a jump only when the COM is moving upward; the ground cannot
            // pull, so the contact is released either way.
            SimState es = to_state(t_event, y_hi, Phase::Flight);
            es.y = 0.0;
            es.dy = 0.0;
            const ComKinematics com = com_kinematics(params_, es);
            ev.kind = com.dy > 0.0 ? EventKind::Takeoff : EventKind::NonJumpDetachment;
            ev.state = es;
            cur.phase = Phase::Flight;
            cur.y = {es.phi, es.theta, es.x, es.y, es.dphi, es.dtheta, es.dx, es.dy, y_hi[8]};
        } else {
            ev.kind = EventKind::Landing;
            ev.state = to_state(t_event, y_hi, Phase::Landed);
            cur.phase = Phase::Landed;
            cur.y = y_hi;
        }
        cur.t = t_event;
        events.push_back(ev);
        if (rows) rows->push_back(make_sample(t_event, cur.y, cur.phase));

        if (cur.phase == Phase::Landed) return false;
    }
    return true;
}

StepOutcome Simulator::step(const SimState& s) const {
    validate_initial(s);
    Cursor cur{s.t, s.phase, {s.phi, s.theta, s.x, s.y, s.dphi, s.dtheta, s.dx, s.dy, 0.0}, 0};
    std::vector<SimEvent> events;
    if (cur.phase == Phase::Rolling && normal_force(cur.t, cur.y) <= 0.0) {
        // Already detached at the start of the step.
        SimState es = to_state(cur.t, cur.y, Phase::Flight);
        const ComKinematics com = com_kinematics(params_, es);
        events.push_back({cur.t,
                          com.dy > 0.0 ? EventKind::Takeoff : EventKind::NonJumpDetachment,
                          es});
        cur.phase = Phase::Flight;
    }
    advance_to(cur, s.t + config_.dt, events, nullptr);
    return {to_state(cur.t, cur.y, cur.phase), std::move(events)};
}

TrajectoryRecord Simulator::run(const SimState& initial) const {
    validate_initial(initial);

    TrajectoryRecord record;
    Cursor cur{initial.t, initial.phase,
               {initial.phi, initial.theta, initial.x, initial.y, initial.dphi,
                initial.dtheta, initial.dx, initial.dy, 0.0},
               0};

    // A rolling start that already has no positive normal force is released
    // immediately (single row at t0, tagged with the new phase).
    if (cur.phase == Phase::Rolling && normal_force(cur.t, cur.y) <= 0.0) {
        if (++cur.events_seen > config_.max_events)
            throw RunawayChatterError("exceeded max_events = " +
                                      std::to_string(config_.max_events));
        SimState es = to_state(cur.t, cur.y, Phase::Flight);
        const ComKinematics com = com_kinematics(params_, es);
        record.events.push_back(
            {cur.t, com.dy > 0.0 ? EventKind::Takeoff : EventKind::NonJumpDetachment, es});
        cur.phase = Phase::Flight;
    }
    record.samples.push_back(make_sample(cur.t, cur.y, cur.phase));

    const double t0 = initial.t;
    const double t_end = t0 + config_.t_end;
    for (long k = 1; cur.t < t_end && cur.phase != Phase::Landed; ++k) {
        double t_target = t0 + static_cast<double>(k) * config_.dt;
        if (t_target > t_end) t_target = t_end;
        const bool alive = advance_to(cur, t_target, record.events, &record.samples);
        if (!alive) break;
        if (record.samples.back().t < cur.t)
            record.samples.push_back(make_sample(cur.t, cur.y, cur.phase));
    }
    return record;
}

}  // namespace hopwheel
