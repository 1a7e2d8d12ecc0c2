#pragma once

#include "trr/conic_solver.hpp"
#include "trr/curves.hpp"
#include "trr/spatial_opt.hpp"

#include <vector>

namespace trr {

struct KinodynamicLimits {
  double v_max = 2.0;
  double a_max = 2.0;
  double delta_alpha = 6.0;  // bound on |d alpha / dt|

  static KinodynamicLimits with_default_rate(double v_max, double a_max) { return {v_max, a_max, 3.0 * a_max}; }
};

struct TranscriptionGrid {
  struct Piece {
    std::vector<double> t;  // K_m nodes from 0 to T_m
    std::vector<Vec3> d1;   // f'(t) at the nodes
    std::vector<Vec3> d2;   // f''(t)
  };
  std::vector<Piece> pieces;
  double dt = 0;
};

/// Node count ceil(T/dt) + 1, with the last interval in (0, dt].
int node_count(double T, double dt);

TranscriptionGrid transcribe(const PiecewiseBezier& traj, double dt);

/// min(0.05 s, shortest piece / 20).
double default_resolution(const PiecewiseBezier& traj);

/// Where each family of variables lives inside the SOCP.
struct TemporalLayout {
  struct Piece {
    int alpha = 0;  // K_m - 1 consecutive entries
    int beta = 0;   // K_m
    int zeta = 0;   // K_m
    int gamma = 0;  // K_m - 1
    int nodes = 0;
  };
  std::vector<Piece> pieces;
  int s = -1;  // -1 when rho == 0
  int size = 0;
};

struct TemporalProgram {
  SocpProblem problem;
  TemporalLayout layout;
};

TemporalProgram build_temporal_socp(const TranscriptionGrid& grid, const KinodynamicLimits& limits, double rho,
                                    const BoundaryState& boundary);

struct TimeMap {
  struct Piece {
    std::vector<double> t;      // grid nodes in the original clock
    std::vector<double> beta;   // at nodes
    std::vector<double> alpha;  // per interval
    std::vector<double> span;   // new-clock duration of each interval
    double duration = 0;        // T*_m
  };
  std::vector<Piece> pieces;
  double rho = 0;

  double total_duration() const;
  std::vector<double> durations() const;
};

/// Rebuilds a TimeMap from betas on a grid: spans are 2 dt / (sqrt b1 + sqrt b0)
/// and alphas the forward differences.
TimeMap make_timemap(const TranscriptionGrid& grid, std::vector<std::vector<double>> beta, double rho);

struct TemporalResult {
  TimeMap map;
  SolveReport report;
};

TemporalResult optimize_temporal(const PiecewiseBezier& traj, const KinodynamicLimits& limits, double rho, double dt,
                                 const BoundaryState& boundary);

/// Same control points with durations replaced by the re-timed ones.
PiecewiseBezier apply_timemap(const PiecewiseBezier& traj, const TimeMap& map);

/// The spatial curve executed on the new clock: t(tau) is exactly quadratic
/// on each interval with tdot = sqrt(beta).
class TimedTrajectory {
 public:
  TimedTrajectory(PiecewiseBezier path, TimeMap map);

  double total_duration() const { return total_; }
  /// Position, velocity and acceleration at new-clock time tau.
  State eval(double tau) const;
  /// Original-clock (piece, t) reached at tau.
  std::pair<std::size_t, double> original_time(double tau) const;
  const PiecewiseBezier& path() const { return path_; }
  const TimeMap& map() const { return map_; }

 private:
  struct Where {
    std::size_t piece;
    std::size_t interval;
    double local;  // tau within the interval
  };
  Where locate(double tau) const;

  PiecewiseBezier path_;
  TimeMap map_;
  std::vector<double> piece_start_;
  std::vector<std::vector<double>> interval_start_;
  double total_ = 0;
};

}  // namespace trr
