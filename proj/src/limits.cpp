#include "chaintrace/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "chaintrace/error.hpp"
#include "chaintrace/kernels.hpp"

namespace chaintrace {

double distance(Metric metric, Point2 a, Point2 b) {
  double dx = std::fabs(a.x - b.x);
  double dy = std::fabs(a.y - b.y);
  if (metric == Metric::Torus) {
    dx = std::min(dx, 1.0 - dx);
    dy = std::min(dy, 1.0 - dy);
  }
  return std::hypot(dx, dy);
}

namespace {

void validate(const PointSet& set) {
  for (const Point2& p : set.points) {
    if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0)) {
      throw Error(Errc::BadInput, "point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                                      ") lies outside the unit square");
    }
  }
}

}  // namespace

LsApprox upper_limit_approx(std::span<const PointSet> sequence, double epsilon, int reference_resolution,
                            double tail_fraction) {
  if (sequence.empty()) throw Error(Errc::EmptySequence, "no sets given");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error(Errc::BadEpsilon, "epsilon must be positive");
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) {
    throw Error(Errc::BadParams, "tail fraction must lie in (0, 1]");
  }
  if (reference_resolution < 1) throw Error(Errc::BadParams, "reference resolution must be positive");
  for (const PointSet& set : sequence) {
    if (set.metric != sequence.front().metric) throw Error(Errc::BadInput, "sets use different metrics");
    validate(set);
  }

  const std::size_t m = sequence.size();
  const std::size_t first = (m + 1) / 2 - 1;  // 0-based start of 1-based ceil(m/2)
  const std::size_t tail = m - first;
  const auto required = static_cast<int>(std::ceil(tail_fraction * static_cast<double>(tail) - 1e-9));

  const int side = reference_resolution + 1;
  std::vector<int> hits(static_cast<std::size_t>(side) * side, 0);
  for (std::size_t n = first; n < m; ++n) {
    const auto mask = parallel::dilation_mask(sequence[n], epsilon, reference_resolution);
    for (std::size_t cell = 0; cell < hits.size(); ++cell) hits[cell] += mask[cell];
  }

  LsApprox out;
  out.epsilon = epsilon;
  out.reference_resolution = reference_resolution;
  out.tail_fraction = tail_fraction;
  for (int p = 0; p < side; ++p)
    for (int q = 0; q < side; ++q)
      if (hits[static_cast<std::size_t>(p) * side + q] >= std::max(required, 1)) out.grid_points.push_back({p, q});
  return out;
}

int connectivity_check(const PointSet& set, double epsilon) {
  if (set.points.empty()) throw Error(Errc::EmptySet, "no points given");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error(Errc::BadEpsilon, "epsilon must be positive");
  validate(set);

  const auto& pts = set.points;
  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  const BucketGrid grid(set, epsilon);
  int count = static_cast<int>(pts.size());
  for (std::size_t a = 0; a < pts.size(); ++a) {
    grid.for_each_near(pts[a], [&](std::size_t b) {
      if (b <= a || distance(set.metric, pts[a], pts[b]) > epsilon) return;
      const auto ra = find(a);
      const auto rb = find(b);
      if (ra != rb) {
        parent[ra] = rb;
        --count;
      }
    });
  }
  return count;
}

}  // namespace chaintrace
