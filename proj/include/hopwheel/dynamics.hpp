#pragma once

#include <stdexcept>

#include "hopwheel/robot_params.hpp"
#include "hopwheel/state.hpp"

namespace hopwheel {

/// Thrown when a mass matrix is numerically singular. Cannot happen for
/// parameters that pass RobotParams::validate().
struct ModelDegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComKinematics {
    double x = 0.0;
    double y = 0.0;
    double dx = 0.0;
    double dy = 0.0;
};

struct Energy {
    double kinetic = 0.0;
    double potential = 0.0;
    double total() const { return kinetic + potential; }
};

/// Rolling-phase accelerations under motor torque tau.
///
/// Solves the 2x2 system from the constrained equations of motion,
///
///   [ I_o + m R²          -m_p l_p R cosθ ] [φ̈]   [ -τ - m_p l_p R θ̇² sinθ ]
///   [ -m_p l_p R cosθ      m_p l_p²       ] [θ̈] = [  τ - m_p l_p g sinθ    ]
///
/// with m = m_o + m_p, and returns ddx = R·φ̈, ddy = 0 from the
/// differentiated rolling constraints.
Accelerations rolling_dynamics(const RobotParams& p, const SimState& s, double tau);

/// Constraint forces sustaining pure rolling for accelerations `a`
/// produced by rolling_dynamics at the same state:
///
///   λ₁ = m_p l_p (-θ̇² sinθ + θ̈ cosθ) - m R φ̈
///   λ₂ = m_p l_p ( θ̇² cosθ + θ̈ sinθ) + m g
ConstraintForces constraint_forces(const RobotParams& p, const SimState& s,
                                   const Accelerations& a);

/// Flight-phase accelerations. The hoop spin decouples, φ̈ = -τ/I_o; the
/// pendulum angle and the free hoop-center translation solve the remaining
/// symmetric 3x3 system. The center of mass undergoes pure projectile
/// motion regardless of tau.
Accelerations flight_dynamics(const RobotParams& p, const SimState& s, double tau);

/// Center-of-mass position and velocity. The pendulum mass sits at
/// (x - l_p sinθ, y - l_p cosθ), so the COM is displaced from the hoop
/// center by (m_p/m)·l_p toward the pendulum:
///
///   com   = (x, y) - (m_p/m) l_p (sinθ, cosθ)
///   d/dt  = (dx, dy) - (m_p/m) l_p θ̇ (cosθ, -sinθ)
ComKinematics com_kinematics(const RobotParams& p, const SimState& s);

/// Kinetic and potential energy,
///   T = ½ m_o |v_o|² + ½ I_o φ̇² + ½ m_p |v_p|²
///   V = m_o g y + m_p g (y - l_p cosθ)
/// with the potential zero level at hoop-center height y = 0.
Energy total_energy(const RobotParams& p, const SimState& s);

/// Quadrature-axis current for a torque command, I_q = τ / K_t with
/// K_t = 60/(2π·kv). Static diagnostic map; no electrical dynamics.
double motor_current(const RobotParams& p, double tau);

}  // namespace hopwheel
