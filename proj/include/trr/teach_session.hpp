#pragma once

#include "trr/convex_corridor.hpp"
#include "trr/grid_world.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace trr {

struct CorridorDelta {
  enum class Op { kNone, kPush, kPop };
  Op op = Op::kNone;
  std::uint64_t seq = 0;
  Polyhedron polyhedron;  // set for kPush
};

const char* to_string(CorridorDelta::Op op);

struct TimedPoint {
  double t = 0;
  Vec3 p = Vec3::Zero();
};

struct TeachOptions {
  InflateOptions inflate;
  /// Interpolation step between consecutive poses, as a fraction of a voxel.
  double step_fraction = 0.25;
  /// Cut occupied voxel cubes out of each pushed hull (see clip_to_free).
  bool clip = true;
};

/// Online corridor construction from a stream of teach poses. Each pushed
/// polyhedron is the hull of a convex cluster seeded at the pose voxel; a pose
/// that re-enters the second-to-last polyhedron pops the last one.
class TeachSession {
 public:
  enum class State { kActive, kFinished };

  /// Rejects a pose that is out of bounds or occupied.
  TeachSession(std::shared_ptr<const OccupancyGrid> grid, const Vec3& pose, double t = 0.0, TeachOptions options = {});

  /// Processes one pose (with linear interpolation from the previous accepted
  /// pose). Returns the deltas applied, or one kNone delta when nothing
  /// changed. An occupied pose is ignored with a warning.
  std::vector<CorridorDelta> update(const Vec3& pose, double t);

  FlightCorridor finish();

  const std::vector<Polyhedron>& polyhedra() const { return polyhedra_; }
  const std::vector<ConvexCluster>& clusters() const { return clusters_; }
  /// Accepted poses not removed by loop elimination.
  const std::vector<TimedPoint>& history() const { return history_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  State state() const { return state_; }
  std::uint64_t last_seq() const { return seq_; }
  const OccupancyGrid& grid() const { return *grid_; }

 private:
  void step(const Vec3& q, std::vector<CorridorDelta>& out);
  void push_at(const Vec3& q, std::vector<CorridorDelta>* out);
  bool covered(const Vec3& p) const;

  std::shared_ptr<const OccupancyGrid> grid_;
  TeachOptions options_;
  std::vector<Polyhedron> polyhedra_;
  std::vector<ConvexCluster> clusters_;
  std::vector<TimedPoint> history_;
  std::vector<std::string> warnings_;
  Vec3 last_;
  State state_ = State::kActive;
  std::uint64_t seq_ = 0;
};

/// Headless replay of a recorded path: first point starts the session.
TeachSession replay_teach(std::shared_ptr<const OccupancyGrid> grid, const std::vector<TimedPoint>& path,
                          TeachOptions options = {});

}  // namespace trr
