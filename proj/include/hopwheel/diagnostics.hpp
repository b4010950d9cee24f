#pragma once

#include <vector>

#include "hopwheel/robot_params.hpp"
#include "hopwheel/trajectory.hpp"

namespace hopwheel {

/// Maximal run of rolling samples where the required friction exceeds the
/// Coulomb cone, |lambda1| > mu * lambda2. max_ratio is the largest
/// |lambda1| / lambda2 over the run (a large sentinel where lambda2 <= 0).
struct SlipInterval {
    double t_start = 0.0;
    double t_end = 0.0;
    double max_ratio = 0.0;
};

/// Physics health checks evaluated over a recorded trajectory. The
/// dynamics assume pure rolling and ballistic flight; these residuals
/// measure how faithfully a record honors that model.
struct DiagnosticsReport {
    double max_energy_residual = 0.0;             ///< max |E - E0 - W| [J]
    double max_rolling_constraint_residual = 0.0; ///< max |x - R phi|, |y| while rolling [m]
    std::vector<SlipInterval> slip_intervals;
    double flight_parabola_residual = 0.0;        ///< max COM quadratic-fit residual [m]
    double flight_ang_momentum_drift = 0.0;       ///< fraction of |L0| per second
};

DiagnosticsReport diagnostics(const TrajectoryRecord& record,
                              const RobotParams& params, double mu);

/// Angular momentum of hoop plus pendulum about the instantaneous center
/// of mass (z component). Conserved in flight: the motor torque is
/// internal and gravity exerts no moment about the COM.
double angular_momentum_about_com(const RobotParams& params, const SimState& s);

}  // namespace hopwheel
