#pragma once

#include "trr/conic_solver.hpp"
#include "trr/convex_corridor.hpp"
#include "trr/curves.hpp"

#include <vector>

namespace trr {

struct BoundaryState {
  State start;
  State end;
};

struct SpatialProblem {
  std::vector<Polyhedron> corridor;  // one piece per polyhedron
  std::vector<double> durations;
  int degree = 5;
  BoundaryState boundary;
};

/// Variable layout of the spatial QP: piece j, axis mu, control point i.
inline int spatial_index(int degree, int piece, int axis, int i) { return (piece * 3 + axis) * (degree + 1) + i; }

/// 1/T^5-free jerk Gram matrix: J = c' Q c / T^5 for one axis of one piece.
Eigen::MatrixXd jerk_gram(int degree);

/// Integral of the squared jerk over the piece, summed over axes.
double jerk_energy(const BezierPiece& piece);
double jerk_energy(const PiecewiseBezier& traj);

QpProblem build_spatial_qp(const SpatialProblem& problem);

struct SpatialResult {
  PiecewiseBezier trajectory;
  SolveReport report;
  double max_halfspace_violation = 0;
};

SpatialResult optimize_spatial(const SpatialProblem& problem);

}  // namespace trr
