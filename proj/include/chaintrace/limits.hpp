#pragma once

#include <array>
#include <span>
#include <vector>

#include "chaintrace/point.hpp"

namespace chaintrace {

enum class Metric { Euclidean, Torus };

// Euclidean distance, or on the torus the minimum over unit shifts of each
// coordinate.
double distance(Metric metric, Point2 a, Point2 b);

struct PointSet {
  Metric metric = Metric::Euclidean;
  std::vector<Point2> points;
};

// Finite stand-in for the upper limit of a sequence of sets: points of the
// reference grid {(p/K, q/K) : 0 <= p, q <= K} that stay within epsilon of
// the sets for at least tail_fraction of the indices in the tail of the
// sequence (1-based indices ceil(m/2) .. m).
struct LsApprox {
  std::vector<std::array<int, 2>> grid_points;  // (p, q), ascending
  double epsilon = 0.0;
  int reference_resolution = 0;
  double tail_fraction = 0.5;

  Point2 point(std::size_t n) const {
    return {static_cast<double>(grid_points[n][0]) / reference_resolution,
            static_cast<double>(grid_points[n][1]) / reference_resolution};
  }
};

// Throws EmptySequence, BadEpsilon, BadParams (tail fraction outside (0,1] or
// K < 1) or BadInput (mixed metrics, coordinates outside [0,1]).
LsApprox upper_limit_approx(std::span<const PointSet> sequence, double epsilon, int reference_resolution,
                            double tail_fraction = 0.5);

// Number of components of the graph joining points at distance <= epsilon.
// Throws EmptySet or BadEpsilon.
int connectivity_check(const PointSet& set, double epsilon);

}  // namespace chaintrace
