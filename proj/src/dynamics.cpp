#include "hopwheel/dynamics.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace hopwheel {

namespace {
constexpr double kDegeneracyTol = 1e-14;
}

Accelerations rolling_dynamics(const RobotParams& p, const SimState& s, double tau) {
    const double m = p.total_mass();
    const double c = std::cos(s.theta);
    const double sn = std::sin(s.theta);
    const double mplp = p.m_p * p.l_p;

    Eigen::Matrix2d M;
    M << p.I_o + m * p.R * p.R, -mplp * p.R * c,
         -mplp * p.R * c,       mplp * p.l_p;
    Eigen::Vector2d rhs(-tau - mplp * p.R * s.dtheta * s.dtheta * sn,
                        tau - mplp * p.g * sn);

    const double det = M.determinant();
    if (!(det > kDegeneracyTol * M(0, 0) * M(1, 1)))
        throw ModelDegeneracyError("rolling mass matrix is singular");

    const Eigen::Vector2d a = M.inverse() * rhs;
    return {a(0), a(1), p.R * a(0), 0.0};
}

ConstraintForces constraint_forces(const RobotParams& p, const SimState& s,
                                   const Accelerations& a) {
    const double m = p.total_mass();
    const double c = std::cos(s.theta);
    const double sn = std::sin(s.theta);
    const double mplp = p.m_p * p.l_p;
    const double dth2 = s.dtheta * s.dtheta;

    return {mplp * (-dth2 * sn + a.ddtheta * c) - m * p.R * a.ddphi,
            mplp * (dth2 * c + a.ddtheta * sn) + m * p.g};
}

Accelerations flight_dynamics(const RobotParams& p, const SimState& s, double tau) {
    const double m = p.total_mass();
    const double c = std::cos(s.theta);
    const double sn = std::sin(s.theta);
    const double mplp = p.m_p * p.l_p;
    const double dth2 = s.dtheta * s.dtheta;

    const double ddphi = -tau / p.I_o;

    // Unknowns ordered (ddtheta, ddx, ddy).
    Eigen::Matrix3d M;
    M << mplp * p.l_p, -mplp * c, mplp * sn,
         -mplp * c,    m,         0.0,
         mplp * sn,    0.0,       m;
    Eigen::Vector3d rhs(tau - mplp * p.g * sn,
                        -mplp * dth2 * sn,
                        -mplp * dth2 * c - m * p.g);

    const double det = M.determinant();
    if (!(det > kDegeneracyTol * M(0, 0) * M(1, 1) * M(2, 2)))
        throw ModelDegeneracyError("flight mass matrix is singular");

    const Eigen::Vector3d a = M.inverse() * rhs;
    return {ddphi, a(0), a(1), a(2)};
}

ComKinematics com_kinematics(const RobotParams& p, const SimState& s) {
    const double r = p.com_offset();
    const double c = std::cos(s.theta);
    const double sn = std::sin(s.theta);
    return {s.x - r * sn,
            s.y - r * c,
            s.dx - r * s.dtheta * c,
            s.dy + r * s.dtheta * sn};
}

Energy total_energy(const RobotParams& p, const SimState& s) {
    const double c = std::cos(s.theta);
    const double sn = std::sin(s.theta);
    const double vpx = s.dx - p.l_p * s.dtheta * c;
    const double vpy = s.dy + p.l_p * s.dtheta * sn;

    const double kinetic = 0.5 * p.m_o * (s.dx * s.dx + s.dy * s.dy) +
                           0.5 * p.I_o * s.dphi * s.dphi +
                           0.5 * p.m_p * (vpx * vpx + vpy * vpy);
    const double potential = p.m_o * p.g * s.y + p.m_p * p.g * (s.y - p.l_p * c);
    return {kinetic, potential};
}

double motor_current(const RobotParams& p, double tau) {
    const double kt = 60.0 / (2.0 * M_PI * p.kv);  // V·s/rad, equivalently N·m/A
    return tau / kt;
}

}  // namespace hopwheel
