#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace trr {

using Vec3 = Eigen::Vector3d;

/// Integer voxel coordinate. Ordering is lexicographic in (x, y, z).
struct Voxel {
  int x = 0;
  int y = 0;
  int z = 0;

  auto operator<=>(const Voxel&) const = default;

  Voxel operator+(const Voxel& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Voxel operator-(const Voxel& o) const { return {x - o.x, y - o.y, z - o.z}; }
};

struct VoxelHash {
  std::size_t operator()(const Voxel& v) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(v.x);
    h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(v.y);
    h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint32_t>(v.z);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A planner could not produce a feasible result.
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// An internal invariant was violated. Always a bug, never a user error.
class Defect : public Error {
 public:
  using Error::Error;
};

/// Position, velocity and acceleration at one instant.
struct State {
  Vec3 p = Vec3::Zero();
  Vec3 v = Vec3::Zero();
  Vec3 a = Vec3::Zero();
};

}  // namespace trr
