#pragma once

#include "trr/common.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trr {

/// Dense boolean voxel map. Queries outside the bounds report occupied, so
/// the world boundary behaves like an obstacle.
class OccupancyGrid {
 public:
  OccupancyGrid(Eigen::Vector3i dims, double resolution, Vec3 origin);

  const Eigen::Vector3i& dims() const { return dims_; }
  double resolution() const { return resolution_; }
  const Vec3& origin() const { return origin_; }
  std::size_t size() const { return cells_.size(); }

  bool inside(const Voxel& v) const {
    return v.x >= 0 && v.y >= 0 && v.z >= 0 && v.x < dims_.x() && v.y < dims_.y() && v.z < dims_.z();
  }
  bool occupied(const Voxel& v) const { return !inside(v) || cells_[index(v)] != 0; }
  bool free(const Voxel& v) const { return !occupied(v); }
  void set(const Voxel& v, bool occupied);

  /// Linear index, x fastest.
  std::size_t index(const Voxel& v) const {
    return static_cast<std::size_t>(v.x) +
           static_cast<std::size_t>(dims_.x()) *
               (static_cast<std::size_t>(v.y) + static_cast<std::size_t>(dims_.y()) * static_cast<std::size_t>(v.z));
  }
  Voxel voxel_at(std::size_t index) const;

  /// Voxel containing a world point (may be out of bounds).
  Voxel voxel_of(const Vec3& p) const;
  Vec3 center(const Voxel& v) const;
  bool occupied_at(const Vec3& p) const { return occupied(voxel_of(p)); }

  std::size_t occupied_count() const;
  double occupied_fraction() const;

  const std::vector<std::uint8_t>& cells() const { return cells_; }
  std::vector<std::uint8_t>& mutable_cells() { return cells_; }

  bool operator==(const OccupancyGrid& o) const = default;

 private:
  Eigen::Vector3i dims_;
  double resolution_;
  Vec3 origin_;
  std::vector<std::uint8_t> cells_;
};

/// True iff the supercover of the segment joining the two voxel centers meets
/// no occupied voxel. Touching an occupied voxel at a face, edge or corner
/// counts as blocked. Endpoints must be inside the grid.
bool raycast_free(const Voxel& a, const Voxel& b, const OccupancyGrid& grid);

enum class TraverseAction { kContinue, kStopFree, kStopBlocked };

/// Walks every voxel whose closed cube touches the segment between the two
/// voxel centers, starting at |from|. The visitor receives the voxel and
/// whether it lies on the main path (as opposed to a voxel only touched at an
/// edge or corner crossing). Returns false if the visitor reported blocked.
template <class Visitor>
bool traverse_supercover(const Voxel& from, const Voxel& to, Visitor&& visit);

/// Distance field sampled at voxel centers, sharing geometry with a grid.
class DistanceField {
 public:
  DistanceField(Eigen::Vector3i dims, double resolution, Vec3 origin, std::vector<double> values, double cap);

  const Eigen::Vector3i& dims() const { return dims_; }
  double resolution() const { return resolution_; }
  const Vec3& origin() const { return origin_; }
  double cap() const { return cap_; }
  const std::vector<double>& values() const { return values_; }

  double at(const Voxel& v) const;

  struct Sample {
    double distance;
    Vec3 gradient;
  };
  /// Trilinear interpolation with its analytic gradient. The point must lie
  /// inside the grid bounds shrunk by one voxel.
  Sample sample(const Vec3& p) const;
  /// Like sample() but clamps the query into the valid region; the gradient
  /// is zeroed along clamped axes.
  Sample sample_clamped(const Vec3& p) const;

 private:
  Sample interpolate(const Vec3& p) const;

  Eigen::Vector3i dims_;
  double resolution_;
  Vec3 origin_;
  std::vector<double> values_;
  double cap_;
};

using Esdf = DistanceField;

inline constexpr double kDefaultDistanceCap = 10.0;

/// Exact Euclidean distance from each voxel center to the nearest occupied
/// voxel center, in meters, clamped to |cap|. Occupied voxels hold 0.
Esdf compute_esdf(const OccupancyGrid& grid, double cap = kDefaultDistanceCap);

/// Signed variant: free voxels as compute_esdf, occupied voxels hold minus
/// the distance to the nearest free voxel center. Used for gradient-based
/// obstacle repulsion where the unsigned field is flat inside obstacles.
DistanceField compute_signed_distance(const OccupancyGrid& grid, double cap = kDefaultDistanceCap);

/// Squared-integer exact distance transform used by both fields. Exposed for
/// tests; |seeds| marks the voxels at distance zero.
std::vector<std::int64_t> squared_distance_transform(const Eigen::Vector3i& dims, const std::vector<std::uint8_t>& seeds);

/// Distance from a point to the nearest occupied voxel cube (0 when inside
/// one). Searches at most |search_radius| meters away; returns that radius
/// when nothing is found.
double clearance(const OccupancyGrid& grid, const Vec3& p, double search_radius);

// ---------------------------------------------------------------------------
// Seeded map generation

struct Keepout {
  Vec3 a;
  Vec3 b;
  double radius;
};

enum class ObstacleKind { kBox, kRing, kArchWall, kTunnel };

/// An explicitly placed obstacle. Boxes use [min, max]. Rings, arch walls
/// and tunnels are oriented along |axis| (0 = x, 1 = y, 2 = z) and centred at
/// |center|.
struct ObstacleSpec {
  ObstacleKind kind = ObstacleKind::kBox;
  Vec3 min = Vec3::Zero();
  Vec3 max = Vec3::Zero();
  Vec3 center = Vec3::Zero();
  int axis = 0;
  double inner_radius = 0.3;  // ring hole radius, arch half width, tunnel half bore
  double outer_radius = 0.6;  // ring outer radius, arch wall half width, tunnel half outer
  double thickness = 0.2;     // extent along |axis| (tunnel length)
  double height = 1.0;        // arch wall height / arch opening height
};

struct RandomKind {
  int count = 0;
  Vec3 min_size = Vec3(0.2, 0.2, 0.2);
  Vec3 max_size = Vec3(1.0, 1.0, 1.0);
};

struct MapRecipe {
  std::uint64_t seed = 0;
  Eigen::Vector3i dims = Eigen::Vector3i(64, 64, 64);
  double resolution = 0.1;
  Vec3 origin = Vec3::Zero();
  RandomKind blocks;
  RandomKind arch_walls;
  RandomKind rings;
  RandomKind tunnels;
  std::optional<double> density;  // target occupied fraction
  std::vector<ObstacleSpec> obstacles;
  std::vector<Keepout> keepouts;
};

struct GeneratedMap {
  OccupancyGrid grid;
  double occupied_fraction;
  std::vector<std::string> warnings;
};

GeneratedMap generate_map(const MapRecipe& recipe);

/// Rasterizes one obstacle into the grid, skipping keepout voxels. Returns
/// the number of voxels that became occupied.
std::size_t stamp_obstacle(OccupancyGrid& grid, const ObstacleSpec& spec, const std::vector<Keepout>& keepouts = {});

}  // namespace trr

#include "trr/detail/supercover.inl"
