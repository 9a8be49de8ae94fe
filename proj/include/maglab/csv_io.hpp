#pragma once

#include <iosfwd>
#include <string>

#include "maglab/trajectory.hpp"

// Trajectory CSV: header `t,x1..xn,y1..yn,z,a1..an,b1..bn,c`, one row per
// node, 17 significant digits, unix line endings. The format round-trips
// doubles exactly, so write -> read -> write is byte-identical.

namespace maglab {

void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

// strength is not stored in the file and must be supplied by the caller;
// cos_theta is taken from the first row. Throws std::runtime_error on
// malformed input.
Trajectory read_trajectory_csv(std::istream& in, double strength);
Trajectory read_trajectory_csv(const std::string& path, double strength);

// 17-significant-digit decimal used across all emitted files.
std::string format_double(double value);

}  // namespace maglab
