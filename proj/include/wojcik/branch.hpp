#pragma once

#include <string_view>

namespace wojcik {

// The two localized channels of the defect walk.
//
//   kPlus : C+ = cos(2 pi phi + pi/4), weight |alpha + i beta|^2,
//           active for phi in (0, 3/4), singular points from
//           eps = 2 pi phi + pi/4.
//   kMinus: C- = cos(2 pi phi - pi/4), weight |alpha - i beta|^2,
//           active for phi in (1/4, 1), singular points from
//           eps = 2 pi phi - pi/4.
//
// The eta = +1 preset (1, i)/sqrt2 lives entirely in kMinus, the eta = -1
// preset entirely in kPlus.
enum class Branch { kPlus, kMinus };

inline constexpr Branch kBranches[] = {Branch::kPlus, Branch::kMinus};

constexpr std::string_view branch_name(Branch b) {
  return b == Branch::kPlus ? "eps_plus" : "eps_minus";
}

}  // namespace wojcik
