#include "chaintrace/candidates.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "chaintrace/error.hpp"

namespace chaintrace {

double wrap_unit(double theta) {
  double r = theta - std::floor(theta);
  if (r >= 1.0) r = 0.0;
  return r;
}

double circle_distance(double a, double b) {
  const double d = std::fabs(wrap_unit(a) - wrap_unit(b));
  return std::min(d, 1.0 - d);
}

double boundary_arc_position(Point2 p) {
  if (p.y == 0.0) return p.x;
  if (p.x == 1.0) return 1.0 + p.y;
  if (p.y == 1.0) return 3.0 - p.x;
  if (p.x == 0.0) return p.y == 0.0 ? 0.0 : 4.0 - p.y;
  // Not on the boundary: fall back to the nearest side.
  const double d[4] = {p.y, 1.0 - p.x, 1.0 - p.y, p.x};
  const auto side = std::min_element(d, d + 4) - d;
  switch (side) {
    case 0: return p.x;
    case 1: return 1.0 + p.y;
    case 2: return 3.0 - p.x;
    default: return 4.0 - p.y;
  }
}

double boundary_arc_distance(Point2 a, Point2 b) {
  const double d = std::fabs(boundary_arc_position(a) - boundary_arc_position(b));
  return std::min(d, 4.0 - d);
}

namespace {

struct Entry {
  std::string_view name;
  std::vector<std::pair<std::string, double>> defaults;
};

const std::vector<Entry>& circle_registry() {
  static const std::vector<Entry> r = {
      {"shorter-arc-midpoint", {}},
      {"lift-average", {}},
      {"first-projection", {}},
      {"constant", {{"c", 0.0}}},
  };
  return r;
}

const std::vector<Entry>& disk_registry() {
  static const std::vector<Entry> r = {
      {"radial", {{"cx", 0.5}, {"cy", 0.5}}},
      {"nearest-boundary", {}},
  };
  return r;
}

const Entry* find_entry(const std::vector<Entry>& reg, std::string_view name) {
  for (const auto& e : reg)
    if (e.name == name) return &e;
  return nullptr;
}

ParamMap resolve_params(const Entry& e, const ParamMap& given) {
  ParamMap out;
  for (const auto& [key, value] : e.defaults) out[key] = value;
  for (const auto& [key, value] : given) {
    if (!out.contains(key)) {
      throw Error(Errc::BadParams, "candidate '" + std::string(e.name) + "' has no parameter '" + key + "'");
    }
    if (!std::isfinite(value)) throw Error(Errc::BadParams, "parameter '" + key + "' is not finite");
    out[key] = value;
  }
  return out;
}

// Midpoint of the shorter arc between x and y; for antipodal pairs the two
// candidate midpoints are symmetric in (x, y), and the smaller one is taken.
std::optional<double> shorter_arc_midpoint(double x, double y) {
  const double lo = std::min(wrap_unit(x), wrap_unit(y));
  const double hi = std::max(wrap_unit(x), wrap_unit(y));
  const double d = hi - lo;
  if (d < 0.5) return wrap_unit(lo + d / 2.0);
  if (d > 0.5) return wrap_unit(hi + (1.0 - d) / 2.0);
  return std::min(wrap_unit(lo + 0.25), wrap_unit(lo + 0.75));
}

std::optional<Point2> radial_projection(double cx, double cy, double x, double y) {
  const double dx = x - cx;
  const double dy = y - cy;
  if (std::hypot(dx, dy) < 1e-15) return std::nullopt;
  double t = INFINITY;
  if (dx > 0) t = std::min(t, (1.0 - cx) / dx);
  if (dx < 0) t = std::min(t, -cx / dx);
  if (dy > 0) t = std::min(t, (1.0 - cy) / dy);
  if (dy < 0) t = std::min(t, -cy / dy);
  auto snap = [](double v) {
    if (std::fabs(v) < 1e-12) return 0.0;
    if (std::fabs(v - 1.0) < 1e-12) return 1.0;
    return std::clamp(v, 0.0, 1.0);
  };
  return Point2{snap(cx + t * dx), snap(cy + t * dy)};
}

Point2 nearest_boundary(double x, double y) {
  // Ties resolved counterclockwise: bottom, right, top, left.
  const double d[4] = {y, 1.0 - x, 1.0 - y, x};
  const auto side = std::min_element(d, d + 4) - d;
  switch (side) {
    case 0: return {x, 0.0};
    case 1: return {1.0, y};
    case 2: return {x, 1.0};
    default: return {0.0, y};
  }
}

}  // namespace

CircleMapCandidate builtin_circle_candidate(std::string_view name, const ParamMap& params) {
  const Entry* e = find_entry(circle_registry(), name);
  if (!e) throw Error(Errc::UnknownCandidate, "no circle candidate named '" + std::string(name) + "'");
  CircleMapCandidate c;
  c.name = std::string(name);
  c.params = resolve_params(*e, params);
  if (name == "shorter-arc-midpoint") {
    c.eval = shorter_arc_midpoint;
    c.claims = {true, true};
  } else if (name == "lift-average") {
    c.eval = [](double x, double y) -> std::optional<double> {
      return wrap_unit((wrap_unit(x) + wrap_unit(y)) / 2.0);
    };
    c.claims = {true, true};
  } else if (name == "first-projection") {
    c.eval = [](double x, double) -> std::optional<double> { return wrap_unit(x); };
    c.claims = {false, true};
  } else {
    const double value = wrap_unit(c.params.at("c"));
    c.eval = [value](double, double) -> std::optional<double> { return value; };
    c.claims = {true, false};
  }
  return c;
}

DiskMapCandidate builtin_disk_candidate(std::string_view name, const ParamMap& params) {
  const Entry* e = find_entry(disk_registry(), name);
  if (!e) throw Error(Errc::UnknownCandidate, "no disk candidate named '" + std::string(name) + "'");
  DiskMapCandidate c;
  c.name = std::string(name);
  c.params = resolve_params(*e, params);
  c.boundary_identity = true;
  if (name == "radial") {
    const double cx = c.params.at("cx");
    const double cy = c.params.at("cy");
    if (!(cx > 0.0 && cx < 1.0 && cy > 0.0 && cy < 1.0)) {
      throw Error(Errc::BadParams, "radial center must lie in the open unit square");
    }
    c.eval = [cx, cy](double x, double y) { return radial_projection(cx, cy, x, y); };
  } else {
    c.eval = [](double x, double y) -> std::optional<Point2> { return nearest_boundary(x, y); };
  }
  return c;
}

Candidate builtin_candidate(std::string_view name, const ParamMap& params) {
  if (find_entry(circle_registry(), name)) return builtin_circle_candidate(name, params);
  if (find_entry(disk_registry(), name)) return builtin_disk_candidate(name, params);
  throw Error(Errc::UnknownCandidate, "no candidate named '" + std::string(name) + "'");
}

std::pair<std::string, ParamMap> parse_map_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  std::string name(spec.substr(0, colon));
  if (name.empty()) throw Error(Errc::BadParams, "empty candidate name");
  ParamMap params;
  if (colon == std::string_view::npos) return {name, params};

  const Entry* e = find_entry(circle_registry(), name);
  if (!e) e = find_entry(disk_registry(), name);
  if (!e) throw Error(Errc::UnknownCandidate, "no candidate named '" + name + "'");

  std::string_view rest = spec.substr(colon + 1);
  std::size_t position = 0;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);

    std::string key;
    std::string_view value_text = item;
    if (const auto eq = item.find('='); eq != std::string_view::npos) {
      key = std::string(item.substr(0, eq));
      value_text = item.substr(eq + 1);
    } else {
      if (position >= e->defaults.size()) {
        throw Error(Errc::BadParams, "too many parameters for '" + name + "'");
      }
      key = e->defaults[position].first;
    }
    ++position;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (ec != std::errc{} || ptr != value_text.data() + value_text.size()) {
      throw Error(Errc::BadParams, "cannot parse parameter value '" + std::string(value_text) + "'");
    }
    params[key] = value;
  }
  return {name, params};
}

}  // namespace chaintrace
