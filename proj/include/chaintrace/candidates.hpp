#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "chaintrace/point.hpp"

namespace chaintrace {

using ParamMap = std::map<std::string, double>;

struct CandidateClaims {
  bool symmetric = false;
  bool retraction = false;
};

// A map (x, y) in [0,1)^2 -> theta in [0,1) standing in for p(r(x, y)), the
// first coordinate of a candidate mean r of the circle. An empty optional
// marks a point where the candidate is undefined.
struct CircleMapCandidate {
  std::string name;
  ParamMap params;
  std::function<std::optional<double>(double, double)> eval;
  CandidateClaims claims;
};

// A map from the closed square [0,1]^2 onto its boundary, standing in for a
// retraction of the disk onto the circle.
struct DiskMapCandidate {
  std::string name;
  ParamMap params;
  std::function<std::optional<Point2>(double, double)> eval;
  bool boundary_identity = false;
};

using Candidate = std::variant<CircleMapCandidate, DiskMapCandidate>;

// Registry lookup. Circle maps: shorter-arc-midpoint, lift-average,
// first-projection, constant(c). Disk maps: radial(cx, cy), nearest-boundary.
// Throws UnknownCandidate or BadParams.
Candidate builtin_candidate(std::string_view name, const ParamMap& params = {});
CircleMapCandidate builtin_circle_candidate(std::string_view name, const ParamMap& params = {});
DiskMapCandidate builtin_disk_candidate(std::string_view name, const ParamMap& params = {});

// Parses "NAME", "NAME:key=v,key=v" or "NAME:v,v" (positional, in the
// candidate's declared parameter order). Throws BadParams on malformed input.
std::pair<std::string, ParamMap> parse_map_spec(std::string_view spec);

// Representative of theta in [0,1).
double wrap_unit(double theta);

// Distance on the circle of circumference 1.
double circle_distance(double a, double b);

// Counterclockwise arc-length position of a boundary point of [0,1]^2,
// starting at (0,0); values in [0,4).
double boundary_arc_position(Point2 p);

// Arc-length distance along the boundary of [0,1]^2 (perimeter 4).
double boundary_arc_distance(Point2 a, Point2 b);

}  // namespace chaintrace
