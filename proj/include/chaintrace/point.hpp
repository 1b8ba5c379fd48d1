#pragma once

#include <compare>

namespace chaintrace {

// A real point of the unit square [0,1]^2.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

}  // namespace chaintrace
