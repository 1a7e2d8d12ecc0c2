#pragma once

#include "trr/curves.hpp"
#include "trr/grid_world.hpp"
#include "trr/temporal_opt.hpp"

#include <functional>
#include <string>
#include <vector>

namespace trr {

struct ReplanConfig {
  double horizon = 3.5;     // s
  double rate = 15.0;       // Hz
  double clearance = 0.4;   // d0, m
  double trigger = 0.2;     // m
  double lambda_smooth = 1.0;
  double lambda_collision = 10.0;
  double lambda_feasibility = 1.0;
  double stretch_cap = 1.1;  // > 1
  double span = 0.0;         // knot span; 0 means horizon / 12
  int degree = 3;
  int max_refine = 12;
  int max_iterations = 300;  // per optimizer call
  int stretch_rounds = 4;
  // A local spline is accepted when its derivative control points stay within
  // these multiples of the limits (the window ends inherit the global
  // trajectory, which is held to the same bounds).
  double velocity_tolerance = 1.02;
  double acceleration_tolerance = 1.05;

  void validate() const;
  double knot_span() const { return span > 0 ? span : horizon / 12.0; }
};

/// Any trajectory the vehicle is commanded to follow, on its own clock [0, duration].
struct Reference {
  std::function<State(double)> state;
  double duration = 0.0;
};

Reference make_reference(TimedTrajectory traj);
Reference make_reference(PiecewiseBezier traj);

struct CollisionReport {
  bool colliding = false;
  double first = 0.0;  // first and last sample closer than the trigger
  double last = 0.0;
  double min_distance = 0.0;
  double min_time = 0.0;
  double window_end = 0.0;
  bool clipped = false;  // horizon ran past the reference end
  std::size_t samples = 0;
};

/// Samples the reference over [t_now, t_now + horizon] with spacing no larger
/// than half a voxel and reports the smallest field value.
CollisionReport check_horizon(const Reference& ref, const DistanceField& field, double t_now, const ReplanConfig& config);

/// F_c(d) = (d - d0)^2 for d <= d0, else 0.
double collision_penalty(double d, double d0);

/// Δt' / Δt = min{cap, max{v_m / v_max, sqrt(a_m / a_max)}}.
double stretch_factor(double v_m, double v_max, double a_m, double a_max, double cap);

struct SplineCosts {
  double smooth = 0;
  double collision = 0;
  double feasibility = 0;
  double total = 0;
};

/// Weighted objective over the free control points (all but the first and
/// last p). Gradient is with respect to the free points stacked x, y, z.
class ElasticBandCost {
 public:
  ElasticBandCost(const BSpline& spline, const DistanceField& field, const KinodynamicLimits& limits, double d0,
                  double lambda_smooth, double lambda_collision, double lambda_feasibility);

  int free_count() const { return free_; }
  Eigen::VectorXd pack(const BSpline& s) const;
  BSpline unpack(const Eigen::VectorXd& x) const;
  double operator()(const Eigen::VectorXd& x, Eigen::VectorXd* grad, SplineCosts* parts = nullptr) const;

 private:
  BSpline base_;
  const DistanceField* field_;
  KinodynamicLimits limits_;
  double d0_, l1_, l2_, l3_;
  int p_, free_;
};

struct MinimizeResult {
  Eigen::VectorXd x;
  double value = 0;
  int iterations = 0;
  bool converged = false;
};

/// Limited-memory quasi-Newton descent with an Armijo backtracking search.
/// Accepted steps never increase the objective.
MinimizeResult minimize_lbfgs(const std::function<double(const Eigen::VectorXd&, Eigen::VectorXd*)>& f,
                              Eigen::VectorXd x0, int max_iterations, double grad_tol = 1e-4, int memory = 8);

struct LimitCheck {
  double v_ratio = 0;  // max over derivative control points and axes of |v| / v_max
  double a_ratio = 0;
  std::vector<double> v_by_point;
  std::vector<double> a_by_point;
};
LimitCheck check_limits(const BSpline& s, const KinodynamicLimits& limits);

/// One pass of knot-span enlargement for every infeasible derivative control
/// point. Spans that affect the boundary derivatives are never changed.
/// Returns the number of spans stretched.
int stretch_spans(BSpline& s, const KinodynamicLimits& limits, double cap);

/// Clearance-weighted shortest voxel path between two points through cells
/// with positive field value. Empty when no path exists.
std::vector<Vec3> clearance_guide(const DistanceField& field, const Vec3& from, const Vec3& to, double clearance);

struct ReplanResult {
  explicit ReplanResult(BSpline s) : spline(std::move(s)) {}

  BSpline spline;
  double t_begin = 0;  // reference clock at window entry and exit
  double t_end = 0;
  bool success = false;
  bool converged = false;
  int refine_rounds = 0;
  int optimizer_iterations = 0;
  int stretches = 0;
  double lambda_collision = 0;
  double lambda_feasibility = 0;
  SplineCosts initial;
  SplineCosts final;
  double min_ctrl_distance = 0;
  double min_curve_distance = 0;  // dense samples of the curve
  LimitCheck limits;
  std::vector<std::string> notes;
};

/// Fits the window with a uniform spline and optimizes its free control
/// points once (no refinement).
ReplanResult replan_window(const Reference& ref, const DistanceField& field, double t_now,
                           const KinodynamicLimits& limits, const ReplanConfig& config);

/// Collision and feasibility post-processing of a replan_window result.
ReplanResult refine(ReplanResult result, const DistanceField& field, const KinodynamicLimits& limits,
                    const ReplanConfig& config);

/// replan_window followed by refine.
ReplanResult replan(const Reference& ref, const DistanceField& field, double t_now, const KinodynamicLimits& limits,
                    const ReplanConfig& config);

}  // namespace trr
