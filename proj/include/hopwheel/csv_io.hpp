#pragma once

#include <iosfwd>
#include <string>

#include "hopwheel/trajectory.hpp"

namespace hopwheel {

/// Fixed trajectory CSV schema. Columns, in order:
///   t, phase, phi, theta, x, y, dphi, dtheta, dx, dy, tau,
///   lambda1, lambda2, x_com, y_com, e_kin, e_pot, slip_flag
/// phase is encoded 0=Rolling, 1=Flight, 2=Landed; slip_flag 0/1; floating
/// values are printed with 17 significant digits.
std::string trajectory_csv_header();

void write_trajectory_csv(std::ostream& os, const TrajectoryRecord& record);

/// Convenience wrapper writing to a file; throws std::runtime_error when
/// the file cannot be opened.
void write_trajectory_csv_file(const std::string& path, const TrajectoryRecord& record);

}  // namespace hopwheel
