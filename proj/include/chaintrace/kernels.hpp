#pragma once

// Data-parallel kernels. Each kernel has a serial reference in
// chaintrace::serial and an OpenMP version in chaintrace::parallel; the two
// return identical results (reductions are order-independent or broken by
// lattice order), which tests/test_kernels.cpp checks.

#include <cstdint>
#include <optional>
#include <vector>

#include "chaintrace/candidates.hpp"
#include "chaintrace/coloring.hpp"
#include "chaintrace/grid.hpp"
#include "chaintrace/limits.hpp"

namespace chaintrace {

// Uniform buckets of side >= radius over the unit square.
class BucketGrid {
 public:
  BucketGrid(const PointSet& set, double radius);

  // Calls f(index) for every point in the buckets around p (a superset of the
  // points within `radius` of p).
  template <typename F>
  void for_each_near(Point2 p, F&& f) const {
    const int cx = cell_of(p.x);
    const int cy = cell_of(p.y);
    if (n_ <= 3) {
      for (const auto& cell : cells_)
        for (std::size_t idx : cell) f(idx);
      return;
    }
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        int x = cx + dx;
        int y = cy + dy;
        if (metric_ == Metric::Torus) {
          x = (x + n_) % n_;
          y = (y + n_) % n_;
        } else if (x < 0 || y < 0 || x >= n_ || y >= n_) {
          continue;
        }
        for (std::size_t idx : cells_[static_cast<std::size_t>(x) * n_ + y]) f(idx);
      }
    }
  }

 private:
  int cell_of(double v) const {
    const int c = static_cast<int>(v * n_);
    return c < 0 ? 0 : (c >= n_ ? n_ - 1 : c);
  }

  Metric metric_;
  int n_;
  std::vector<std::vector<std::size_t>> cells_;
};

// Largest deviation seen by a scan; ties go to the least lattice point.
struct ScanBest {
  double deviation = -1.0;
  GridPoint at;

  bool beats(const ScanBest& other) const {
    return deviation > other.deviation || (deviation == other.deviation && at < other.at);
  }
};

// Scan of the k-grid {(i/k, j/k) : 0 <= i, j < k} for failures of
// r(x,y) = r(y,x) and r(x,x) = x, measured by circle distance.
struct MeanScan {
  int k = 0;
  ScanBest symmetry;
  ScanBest retraction;
  std::optional<GridPoint> undefined;  // least undefined sample, if any
};

struct LemmaSweep {
  std::uint64_t checked = 0;
  std::uint64_t found = 0;
  std::optional<std::uint64_t> first_failure;  // enumeration index

  bool ok() const { return checked == found; }
};

struct ChainSweep {
  std::uint64_t colorings = 0;
  std::uint64_t chains = 0;
  std::uint64_t gate_count_failures = 0;   // simplexes with a gate count other than 0 or 2
  std::uint64_t termination_failures = 0;  // chains not ending on the boundary, or repeating
  std::uint64_t overlap_failures = 0;      // distinct chains sharing a simplex
  std::uint64_t reversal_failures = 0;     // trace from the far end is not the reverse

  bool ok() const {
    return gate_count_failures == 0 && termination_failures == 0 && overlap_failures == 0 &&
           reversal_failures == 0;
  }
  friend bool operator==(const ChainSweep&, const ChainSweep&) = default;
};

// Coloring of D^2(k) number `index` in the enumeration used by
// verify_lemma_exhaustive: f(b) = -f(a), and the remaining vertices (in
// (i, j) order, b skipped) take -1 where the corresponding bit is set.
Coloring enumerated_coloring(int k, GridPoint a, GridPoint b, std::uint64_t index);

// Uniform random coloring, a pure function of (k, seed, index).
Coloring random_coloring(int k, std::uint64_t seed, std::uint64_t index);

// Checks boundary-started chains of one coloring of the full square.
ChainSweep check_square_chains(const Coloring& c);

namespace serial {

Coloring sample_coloring(int k, const CircleMapCandidate& candidate);
std::vector<std::uint8_t> dilation_mask(const PointSet& set, double epsilon, int reference_resolution);
MeanScan scan_mean_candidate(const CircleMapCandidate& candidate, int k);
LemmaSweep verify_lemma_exhaustive(int k, GridPoint a, GridPoint b);
ChainSweep sweep_random_colorings(int k, std::uint64_t count, std::uint64_t seed);

}  // namespace serial

namespace parallel {

Coloring sample_coloring(int k, const CircleMapCandidate& candidate);
std::vector<std::uint8_t> dilation_mask(const PointSet& set, double epsilon, int reference_resolution);
MeanScan scan_mean_candidate(const CircleMapCandidate& candidate, int k);
LemmaSweep verify_lemma_exhaustive(int k, GridPoint a, GridPoint b, int threads = 0);
ChainSweep sweep_random_colorings(int k, std::uint64_t count, std::uint64_t seed);

}  // namespace parallel

}  // namespace chaintrace
