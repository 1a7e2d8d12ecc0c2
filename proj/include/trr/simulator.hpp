#pragma once

#include "trr/global_planner.hpp"
#include "trr/grid_world.hpp"
#include "trr/local_replanner.hpp"
#include "trr/teach_session.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace trr {

/// An obstacle added to the true map at |time|. With |at_path_time| set the
/// obstacle is first translated so its centre sits on the global trajectory
/// at that (executed) time.
struct Injection {
  double time = 0.0;
  ObstacleSpec obstacle;
  std::optional<double> at_path_time;
};

struct Scenario {
  std::string name;
  MapRecipe map;
  std::vector<TimedPoint> teach_path;
  KinodynamicLimits limits;
  DescentConfig descent;
  ReplanConfig replan;
  TeachOptions teach;
  std::vector<Injection> injections;
  double tick_rate = 100.0;  // Hz
  double lag = 0.05;         // first-order tracking time constant, s (0 tracks exactly)
  double sensing_range = 5.0;
  bool replanning = true;
  double settle = 0.5;  // s simulated after the command ends
  // Fixed position offset applied to the true vehicle position from drift_time on.
  Vec3 drift = Vec3::Zero();
  double drift_time = 0.0;

  void validate() const;
};

struct VehicleState {
  double t = 0;
  Vec3 p = Vec3::Zero();
  Vec3 v = Vec3::Zero();
  double yaw = 0;
};

struct TickRecord {
  std::uint64_t tick = 0;
  double tau = 0;  // command clock
  VehicleState state;
  State command;
  double clearance = 0;  // true vehicle position against the true map
};

struct RunEvent {
  std::uint64_t tick = 0;
  double t = 0;
  std::string kind;  // injection, replan, replan_failed, emergency_stop, complete
  std::string detail;
};

struct ReplanRecord {
  double t = 0;
  double tau = 0;
  bool success = false;
  double v_ratio = 0;
  double a_ratio = 0;
  double min_ctrl_distance = 0;
  double min_curve_distance = 0;
  double boundary_error = 0;  // max over p, v, a at entry and exit
  double rejoin = 0;          // reference time at window exit
  BSpline spline;
};

struct RunLog {
  std::string scenario;
  std::vector<TickRecord> ticks;
  std::vector<RunEvent> events;
  std::vector<ReplanRecord> replans;
  std::size_t corridor_size = 0;
  int descent_rounds = 0;
  double planned_duration = 0;
  double min_clearance = 0;
  double max_tracking_error = 0;
  bool completed = false;
  bool emergency_stop = false;

  int replan_count() const { return static_cast<int>(replans.size()); }
  bool operator==(const RunLog&) const;
};

/// Command timeline: the global trajectory with local splines spliced in.
class CommandPlan {
 public:
  explicit CommandPlan(Reference base);

  State eval(double tau) const;
  double duration() const { return segments_.back().end; }
  Reference reference() const;
  /// Replaces [result.t_begin, result.t_end] of the current timeline with the
  /// spline; the remainder is shifted by the spline's extra duration.
  void splice(const ReplanResult& result);
  std::size_t segment_count() const { return segments_.size(); }

 private:
  struct Segment {
    double start;
    double end;
    double offset;  // evaluate f(tau - start + offset)
    std::shared_ptr<const std::function<State(double)>> f;
  };
  std::vector<Segment> segments_;
};

State spline_state(const BSpline& s, double t);

/// Scale of the tracking error a first-order lag can build up when following
/// a command whose per-axis speed never exceeds |v|. Per axis, exact for the
/// discrete update used by the simulator.
double lag_error_bound(double v, double lag, double dt);

struct PlannedScenario {
  std::shared_ptr<const OccupancyGrid> map;
  FlightCorridor corridor;
  GlobalTrajectory global;
};

/// Teach replay, corridor and global plan on the known map.
PlannedScenario plan_scenario(const Scenario& scenario);

RunLog run_scenario(const Scenario& scenario);
RunLog run_planned(const Scenario& scenario, const PlannedScenario& planned);

// ---------------------------------------------------------------------------
// Seeded scenario families

std::vector<TimedPoint> polyline_path(const std::vector<Vec3>& corners, double step, double speed = 1.0);

/// Room with a 0.6 m ring, an arch wall and random blocks kept off the taught
/// path.
Scenario racing_scenario(std::uint64_t seed);

/// Sparse room where an unmapped obstacle appears on the global trajectory
/// about two seconds ahead of the vehicle.
Scenario injection_scenario(std::uint64_t seed);

/// Empty room, straight teach path, no injections.
Scenario empty_scenario(double lag = 0.05);

}  // namespace trr
