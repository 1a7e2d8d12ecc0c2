#pragma once

#include "trr/common.hpp"
#include "trr/grid_world.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace trr {

enum class VoxelLabel : std::uint8_t { kOuter, kInner };

/// A set of free voxels in which every pair of centres is joined by a free
/// supercover ray. Members are kept in lexicographic order.
class ConvexCluster {
 public:
  ConvexCluster(const OccupancyGrid& grid, Voxel seed, std::vector<Voxel> members, bool truncated = false);

  const std::vector<Voxel>& members() const { return members_; }
  const std::vector<VoxelLabel>& labels() const { return labels_; }
  std::size_t size() const { return members_.size(); }
  const Voxel& seed() const { return seed_; }
  bool truncated() const { return truncated_; }

  double resolution() const { return resolution_; }
  const Vec3& origin() const { return origin_; }
  const Eigen::Vector3i& dims() const { return dims_; }

  bool contains(const Voxel& v) const;
  /// Label of a member; throws for non-members.
  VoxelLabel label(const Voxel& v) const;
  std::vector<Voxel> outer() const;
  double volume() const { return static_cast<double>(members_.size()) * resolution_ * resolution_ * resolution_; }

 private:
  Voxel seed_;
  std::vector<Voxel> members_;
  std::vector<VoxelLabel> labels_;
  bool truncated_;
  double resolution_;
  Vec3 origin_;
  Eigen::Vector3i dims_;
};

enum class InflateMode { kRaw, kCubeInit, kCubeInitPruned, kParallel };

struct InflateOptions {
  InflateMode mode = InflateMode::kCubeInitPruned;
  int lanes = 1;
  std::optional<std::size_t> max_members;
};

struct InflateStats {
  std::size_t sweeps = 0;
  std::size_t candidates = 0;
  std::size_t rays = 0;
  std::size_t deferred = 0;  // parallel: candidates dropped because an earlier admitted candidate occludes them
};

/// Maximal axis-aligned free box around |seed|, grown one layer per face in
/// the order +x, -x, +y, -y, +z, -z until every face is blocked.
ConvexCluster inflate_cube(const Voxel& seed, const OccupancyGrid& grid);

/// Convexity test for adding |candidate| to |cluster|. The pruned variant only
/// casts rays to outer members and stops each ray at the first inner member
/// on its main path.
bool check_convexity(const Voxel& candidate, const ConvexCluster& cluster, const OccupancyGrid& grid, bool pruned);

/// Frontier-sweep cluster growth. Within a sweep candidates are examined in
/// lexicographic order and earlier acceptances constrain later ones.
ConvexCluster convex_inflate(const Voxel& seed, const OccupancyGrid& grid, const InflateOptions& opts = {},
                             InflateStats* stats = nullptr);

/// Lane-parallel growth. Each sweep checks every candidate against the
/// cluster snapshot and against lower-index candidates, then merges in index
/// order. Equal to the serial cube_init_pruned output for every lane count.
ConvexCluster parallel_convex_inflate(const Voxel& seed, const OccupancyGrid& grid, int lanes,
                                      std::optional<std::size_t> max_members = std::nullopt,
                                      InflateStats* stats = nullptr);

struct Halfspace {
  Vec3 a;  // unit normal
  double k;

  double violation(const Vec3& p) const { return a.dot(p) - k; }
};

/// Convex polytope in both representations.
struct Polyhedron {
  std::vector<Halfspace> halfspaces;
  std::vector<Vec3> vertices;

  bool contains(const Vec3& p, double slack = 1e-9) const;
  double max_violation(const Vec3& p) const;
};

/// Convex hull of the member voxel cubes (the hull of the member centres
/// grown by the voxel cube). Computed exactly on the integer corner lattice.
Polyhedron cluster_to_polyhedron(const ConvexCluster& cluster);

/// Vertices of the bounded polytope described by |halfspaces| (every feasible
/// intersection of three planes, merged within |tol|).
std::vector<Vec3> polytope_vertices(const std::vector<Halfspace>& halfspaces, double tol = 1e-9);

struct ClipReport {
  int cuts = 0;
  int unseparable = 0;  // intruding voxels whose cube meets the member centre hull
};

/// Cuts every occupied voxel cube out of the interior of |poly|. Each cut is
/// the maximum-margin plane between the cube and the member centres plus
/// |keep|, moved flush against the cube. The member centres (and |keep|)
/// stay inside whenever they are separable from the cube.
Polyhedron clip_to_free(const Polyhedron& poly, const ConvexCluster& cluster, const OccupancyGrid& grid,
                        const std::vector<Vec3>& keep = {}, ClipReport* report = nullptr);

/// Ordered polyhedra from a teach run with the recorded end states.
struct FlightCorridor {
  std::vector<Polyhedron> polyhedra;
  State start;
  State end;
  std::vector<Vec3> teach_path;
};

/// Exact 3-D convex hull of lattice points. Returns the unique facet planes as
/// (n, d) with n . q <= d, gcd-normalized, and the extreme points.
struct LatticeHull {
  struct Plane {
    Eigen::Matrix<std::int64_t, 3, 1> n;
    std::int64_t d;
  };
  std::vector<Plane> planes;
  std::vector<Eigen::Vector3i> vertices;
};
LatticeHull lattice_hull(std::vector<Eigen::Vector3i> points);

}  // namespace trr
