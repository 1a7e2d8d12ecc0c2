#pragma once

// Exact supercover traversal between two voxel centers. Voxel centers sit on
// the integer lattice (in voxel units) and faces on half-integers, so every
// face crossing happens at t = (2n + 1) / (2|d|); comparing those fractions by
// cross multiplication keeps edge and corner ties exact.

#include <array>
#include <cstdint>
#include <cstdlib>

namespace trr {

template <class Visitor>
bool traverse_supercover(const Voxel& from, const Voxel& to, Visitor&& visit) {
  const std::array<int, 3> start{from.x, from.y, from.z};
  const std::array<int, 3> delta{to.x - from.x, to.y - from.y, to.z - from.z};
  std::array<int, 3> step{};
  std::array<std::int64_t, 3> den{};
  std::array<std::int64_t, 3> crossed{};
  for (int k = 0; k < 3; ++k) {
    step[k] = delta[k] > 0 ? 1 : (delta[k] < 0 ? -1 : 0);
    den[k] = 2 * static_cast<std::int64_t>(std::abs(delta[k]));
  }

  std::array<int, 3> cur = start;
  auto as_voxel = [](const std::array<int, 3>& c) { return Voxel{c[0], c[1], c[2]}; };

  switch (visit(as_voxel(cur), true)) {
    case TraverseAction::kStopBlocked: return false;
    case TraverseAction::kStopFree: return true;
    case TraverseAction::kContinue: break;
  }

  const std::int64_t total = std::abs(delta[0]) + std::abs(delta[1]) + std::abs(delta[2]);
  std::int64_t steps_done = 0;
  while (steps_done < total) {
    // Axis set achieving the earliest next crossing.
    int best = -1;
    std::array<bool, 3> tie{false, false, false};
    for (int k = 0; k < 3; ++k) {
      if (step[k] == 0 || crossed[k] == std::abs(delta[k])) continue;
      if (best < 0) {
        best = k;
        tie = {false, false, false};
        tie[k] = true;
        continue;
      }
      // compare (2 crossed[k] + 1) / den[k] against best
      const std::int64_t lhs = (2 * crossed[k] + 1) * den[best];
      const std::int64_t rhs = (2 * crossed[best] + 1) * den[k];
      if (lhs < rhs) {
        best = k;
        tie = {false, false, false};
        tie[k] = true;
      } else if (lhs == rhs) {
        tie[k] = true;
      }
    }

    int mask = 0;
    for (int k = 0; k < 3; ++k)
      if (tie[k]) mask |= 1 << k;

    // Voxels touched only at the edge or corner of the crossing.
    for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
      std::array<int, 3> side = cur;
      for (int k = 0; k < 3; ++k)
        if (sub & (1 << k)) side[k] += step[k];
      switch (visit(as_voxel(side), false)) {
        case TraverseAction::kStopBlocked: return false;
        case TraverseAction::kStopFree: return true;
        case TraverseAction::kContinue: break;
      }
    }

    for (int k = 0; k < 3; ++k) {
      if (mask & (1 << k)) {
        cur[k] += step[k];
        ++crossed[k];
        ++steps_done;
      }
    }
    switch (visit(as_voxel(cur), true)) {
      case TraverseAction::kStopBlocked: return false;
      case TraverseAction::kStopFree: return true;
      case TraverseAction::kContinue: break;
    }
  }
  return true;
}

}  // namespace trr
