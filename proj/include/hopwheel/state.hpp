#pragma once

namespace hopwheel {

/// Contact regime of the hybrid dynamics.
enum class Phase { Rolling = 0, Flight = 1, Landed = 2 };

/// Generalized coordinates and velocities at one instant.
///
/// phi and theta are the hoop and pendulum angles measured in the spatial
/// frame (theta = 0 puts the pendulum straight down). x and y locate the
/// hoop center; y = 0 is the ground-contact height. While rolling, x = R·phi
/// and y = dy = 0 hold.
struct SimState {
    double t = 0.0;
    double phi = 0.0;
    double theta = 0.0;
    double x = 0.0;
    double y = 0.0;
    double dphi = 0.0;
    double dtheta = 0.0;
    double dx = 0.0;
    double dy = 0.0;
    Phase phase = Phase::Rolling;

    /// Pendulum angular velocity relative to the hoop; the quantity the
    /// motor controller tracks.
    double psi_dot() const { return dtheta - dphi; }
};

/// Second time derivatives of the generalized coordinates.
struct Accelerations {
    double ddphi = 0.0;
    double ddtheta = 0.0;
    double ddx = 0.0;
    double ddy = 0.0;
};

/// Rolling-phase constraint forces: lambda1 is the friction force that
/// prevents slip, lambda2 the normal reaction that maintains contact.
/// Both are identically zero in flight.
struct ConstraintForces {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

}  // namespace hopwheel
