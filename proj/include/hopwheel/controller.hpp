#pragma once

#include <algorithm>

#include "hopwheel/state.hpp"

namespace hopwheel {

/// Proportional tracking of a reference relative angular velocity.
///
/// The gain and the saturation behavior are not fixed by the hardware;
/// the defaults here are the values used by the builtin scenarios.
struct ControllerConfig {
    double kp = 0.01;                 ///< proportional gain [N·m·s/rad]
    double tau_max = 0.376;           ///< clamp magnitude [N·m]
    bool saturation_enabled = false;  ///< clamp the raw command to ±tau_max
};

/// tau = kp·(psi_dot_ref - psi_dot), optionally clamped to ±tau_max.
/// Positive tau acts on the pendulum and reacts with -tau on the hoop.
inline double control_torque(const ControllerConfig& cfg, double psi_dot_ref,
                             const SimState& s) {
    const double tau = cfg.kp * (psi_dot_ref - s.psi_dot());
    return cfg.saturation_enabled ? std::clamp(tau, -cfg.tau_max, cfg.tau_max) : tau;
}

}  // namespace hopwheel
