#pragma once

#include "trr/convex_corridor.hpp"
#include "trr/spatial_opt.hpp"
#include "trr/temporal_opt.hpp"

#include <optional>
#include <vector>

namespace trr {

struct DescentConfig {
  double time_weight = 1.0;  // w_T
  double rho = 0.0;
  double dt = 0.0;  // 0 picks default_resolution per round
  int max_rounds = 8;
  double tolerance = 1e-3;
  int degree = 5;
  // Durations handed to the next spatial round are kept at or above this
  // fraction of the mean piece duration. Without it a piece can shrink toward
  // zero over rounds and the 1/T^5 energy weights make the QP unsolvable.
  double min_duration_fraction = 0.05;
  std::optional<std::vector<double>> initial_durations;
};

struct Cost {
  double energy = 0;
  double time = 0;
  double total = 0;
};

Cost evaluate_cost(const PiecewiseBezier& traj, const DescentConfig& config);

struct DescentRound {
  Cost cost;
  bool accepted = false;
};

struct GlobalTrajectory {
  PiecewiseBezier path;        // spatial solution on its own clock
  TimeMap time_map;            // re-timing of |path|
  PiecewiseBezier trajectory;  // path with re-timed durations
  std::vector<DescentRound> history;
  int rounds = 0;

  TimedTrajectory executed() const { return TimedTrajectory(path, time_map); }
};

/// Centre of the largest ball inside the intersection of two polyhedra, or
/// nullopt when the intersection has no interior or is unbounded.
std::optional<Vec3> chebyshev_center(const Polyhedron& a, const Polyhedron* b = nullptr);

/// Chord length through the joint overlap centres divided by v_max, floored
/// at four transcription steps.
std::vector<double> initial_durations(const FlightCorridor& corridor, const KinodynamicLimits& limits, double dt);

GlobalTrajectory plan_global(const FlightCorridor& corridor, const KinodynamicLimits& limits,
                             const DescentConfig& config = {});

}  // namespace trr
