#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopwheel/controller.hpp"
#include "hopwheel/reference.hpp"
#include "hopwheel/robot_params.hpp"
#include "hopwheel/state.hpp"
#include "hopwheel/trajectory.hpp"

namespace hopwheel {

/// Fixed-step integration settings and event-localization tolerances.
struct SimConfig {
    double dt = 1e-4;              ///< integration step [s]
    double t_end = 8.0;            ///< horizon [s]
    double event_time_tol = 1e-12; ///< bisection bracket width for events [s]
    double constraint_tol = 1e-9;  ///< allowed rolling-constraint violation [m]
    int max_events = 100;          ///< guard against event chatter

    void validate() const;
};

/// Raised when a state component leaves the finite range; carries the last
/// state that was still finite.
struct NumericalDivergenceError : std::runtime_error {
    NumericalDivergenceError(const std::string& msg, const SimState& last)
        : std::runtime_error(msg), last_good(last) {}
    SimState last_good;
};

/// Raised when a run produces more phase-transition events than
/// SimConfig::max_events allows.
struct RunawayChatterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepOutcome {
    SimState state;
    std::vector<SimEvent> events;
};

/// Hybrid rolling/flight integrator.
///
/// Classical 4th-order Runge-Kutta at fixed dt on the active phase's
/// vector field; the commanded torque is re-evaluated at every RK stage
/// from the stage state and stage time. Takeoff is the zero crossing of
/// the normal reaction (classified as a jump when the COM is moving
/// upward), landing the return of the hoop-center height to zero; both
/// are localized in time by bisection. A run ends at the first landing --
/// post-impact motion is not modeled.
class Simulator {
public:
    Simulator(RobotParams params, SimConfig config, ReferenceProfile profile,
              ControllerConfig controller);

    /// Instantaneous closed-loop torque command at (t, state).
    double torque_at(double t, const SimState& s) const;

    /// Advance one grid step; phase transitions inside the step are
    /// localized and reported.
    StepOutcome step(const SimState& s) const;

    /// Integrate from `initial` until landing or t_end, recording every
    /// step and every event. Deterministic: identical inputs produce
    /// identical records.
    TrajectoryRecord run(const SimState& initial) const;

    /// Robot at rest at the origin, pendulum hanging down, in contact.
    static SimState rest_state();

    const RobotParams& params() const { return params_; }
    const SimConfig& config() const { return config_; }

private:
    // State vector layout: phi, theta, x, y, dphi, dtheta, dx, dy, work.
    using StateVec = std::array<double, 9>;

    struct Cursor {
        double t = 0.0;
        Phase phase = Phase::Rolling;
        StateVec y{};
        int events_seen = 0;
    };

    SimState to_state(double t, const StateVec& y, Phase phase) const;
    void eval_field(double t, const StateVec& y, Phase phase, StateVec& dydt) const;
    StateVec rk4_step(double t, const StateVec& y, double h, Phase phase) const;
    double normal_force(double t, const StateVec& y) const;

    TrajectorySample make_sample(double t, const StateVec& y, Phase phase) const;
    void validate_initial(const SimState& s) const;

    /// Advance `cur` to t_target, localizing any events on the way. Event
    /// rows are appended to `rows` (when non-null) and events to `events`.
    /// Returns false when the run terminated by landing.
    bool advance_to(Cursor& cur, double t_target, std::vector<SimEvent>& events,
                    std::vector<TrajectorySample>* rows) const;

    RobotParams params_;
    SimConfig config_;
    ReferenceProfile profile_;
    ControllerConfig controller_;
};

}  // namespace hopwheel
