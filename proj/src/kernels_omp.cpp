#include <omp.h>

#include <limits>

#include "chaintrace/kernels.hpp"
#include "kernel_detail.hpp"

namespace chaintrace::parallel {

Coloring sample_coloring(int k, const CircleMapCandidate& candidate) {
  const int side = k + 1;
  std::vector<int> values(static_cast<std::size_t>(side) * side, 0);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < side; ++j) {
    for (int i = 0; i < side; ++i) {
      const auto v = detail::sample_vertex(k, candidate, i, j);
      values[static_cast<std::size_t>(j) * side + i] = v ? *v : 0;
    }
  }
  // The candidate may be undefined somewhere; report the least such point.
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j)
      if (values[static_cast<std::size_t>(j) * side + i] == 0) throw detail::undefined_at(k, {i, j});
  std::vector<std::vector<int>> rows(side);
  for (int j = 0; j < side; ++j) rows[j].assign(values.begin() + j * side, values.begin() + (j + 1) * side);
  return Coloring::from_rows(k, rows);
}

std::vector<std::uint8_t> dilation_mask(const PointSet& set, double epsilon, int reference_resolution) {
  const int side = reference_resolution + 1;
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(side) * side, 0);
  if (set.points.empty()) return mask;
  const BucketGrid grid(set, epsilon);
#pragma omp parallel for schedule(dynamic, 8)
  for (int p = 0; p < side; ++p) {
    for (int q = 0; q < side; ++q) {
      const Point2 g{static_cast<double>(p) / reference_resolution, static_cast<double>(q) / reference_resolution};
      bool near = false;
      grid.for_each_near(g, [&](std::size_t idx) {
        if (!near && distance(set.metric, g, set.points[idx]) <= epsilon) near = true;
      });
      mask[static_cast<std::size_t>(p) * side + q] = near ? 1 : 0;
    }
  }
  return mask;
}

MeanScan scan_mean_candidate(const CircleMapCandidate& candidate, int k) {
  MeanScan total;
  total.k = k;
#pragma omp parallel
  {
    MeanScan local;
    local.k = k;
#pragma omp for schedule(static) nowait
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) detail::scan_cell(candidate, k, i, j, local);
#pragma omp critical
    detail::merge_scan(total, local);
  }
  return total;
}

LemmaSweep verify_lemma_exhaustive(int k, GridPoint a, GridPoint b, int threads) {
  const std::uint64_t count = detail::lemma_count(k, a, b);
  const Rectangle r = Rectangle::spanning(a, b);
  const int team = threads > 0 ? threads : omp_get_max_threads();
  std::uint64_t found = 0;
  std::uint64_t first_failure = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel for num_threads(team) schedule(dynamic, 512) reduction(+ : found) reduction(min : first_failure)
  for (std::uint64_t index = 0; index < count; ++index) {
    if (detail::lemma_holds(k, a, b, r, index)) {
      ++found;
    } else if (index < first_failure) {
      first_failure = index;
    }
  }
  LemmaSweep out;
  out.checked = count;
  out.found = found;
  if (first_failure != std::numeric_limits<std::uint64_t>::max()) out.first_failure = first_failure;
  return out;
}

ChainSweep sweep_random_colorings(int k, std::uint64_t count, std::uint64_t seed) {
  ChainSweep total;
#pragma omp parallel
  {
    ChainSweep local;
#pragma omp for schedule(dynamic, 4) nowait
    for (std::uint64_t n = 0; n < count; ++n) detail::add(local, check_square_chains(random_coloring(k, seed, n)));
#pragma omp critical
    detail::add(total, local);
  }
  return total;
}

}  // namespace chaintrace::parallel
