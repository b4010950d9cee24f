#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hopwheel {

/// Physical constants of the pendulum-driven wheel robot.
///
/// The robot is a thin hoop (mass m_o, radius R, inertia I_o about its
/// geometric center) carrying a point mass m_p on a massless arm of length
/// l_p pivoted at the hoop center. Defaults describe the desk-scale
/// prototype: 600 g total, 125 g offset mass at 51 mm, 152 mm hoop
/// diameter, 0.376 N·m motor torque limit.
struct RobotParams {
    double m_o = 0.475;                ///< hoop mass [kg]
    double m_p = 0.125;                ///< pendulum point mass [kg]
    double R = 0.076;                  ///< hoop radius [m]
    double l_p = 0.051;                ///< pendulum arm length [m]
    double I_o = 0.475 * 0.076 * 0.076;  ///< hoop inertia about center [kg·m²]
    double g = 9.81;                   ///< gravitational acceleration [m/s²]
    double tau_max = 0.376;            ///< motor torque saturation [N·m]
    double mu = 0.8;                   ///< friction coefficient (slip diagnostics only)
    double kv = 380.0;                 ///< motor velocity constant [rpm/V] (current map only)

    double total_mass() const { return m_o + m_p; }

    /// Distance from the hoop center to the system center of mass.
    double com_offset() const { return m_p / total_mass() * l_p; }

    /// Thin-hoop inertia m_o R² for the current mass and radius.
    double thin_hoop_inertia() const { return m_o * R * R; }

    /// Hoop diameter, the "body length" unit used for jump metrics.
    double body_length() const { return 2.0 * R; }

    /// Throws std::invalid_argument naming the offending field.
    void validate() const {
        auto positive = [](double v, const char* name) {
            if (!(v > 0.0) || !std::isfinite(v))
                throw std::invalid_argument(std::string(name) + " must be a positive finite number");
        };
        positive(m_o, "m_o");
        positive(m_p, "m_p");
        positive(R, "R");
        positive(l_p, "l_p");
        positive(I_o, "I_o");
        positive(g, "g");
        positive(tau_max, "tau_max");
        positive(kv, "kv");
        if (!(mu >= 0.0) || !std::isfinite(mu))
            throw std::invalid_argument("mu must be a non-negative finite number");
        if (!(l_p < R))
            throw std::invalid_argument("l_p must be smaller than R (offset mass sits inside the hoop)");
    }
};

}  // namespace hopwheel
