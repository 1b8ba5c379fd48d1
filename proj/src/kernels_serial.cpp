#include <algorithm>
#include <map>
#include <random>

#include "chaintrace/kernels.hpp"
#include "kernel_detail.hpp"

namespace chaintrace {

BucketGrid::BucketGrid(const PointSet& set, double radius) : metric_(set.metric) {
  const double per_side = std::floor(1.0 / radius);
  n_ = static_cast<int>(std::clamp(per_side, 1.0, 2048.0));
  cells_.resize(static_cast<std::size_t>(n_) * n_);
  for (std::size_t idx = 0; idx < set.points.size(); ++idx) {
    const Point2 p = set.points[idx];
    cells_[static_cast<std::size_t>(cell_of(p.x)) * n_ + cell_of(p.y)].push_back(idx);
  }
}

Coloring enumerated_coloring(int k, GridPoint a, GridPoint b, std::uint64_t index) {
  std::vector<std::vector<int>> rows(k + 1, std::vector<int>(k + 1, 1));
  int bit = 0;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      if (GridPoint{i, j} == b) continue;
      rows[j][i] = ((index >> bit) & 1) ? -1 : 1;
      ++bit;
    }
  }
  rows[b.j][b.i] = -rows[a.j][a.i];
  return Coloring::from_rows(k, rows);
}

Coloring random_coloring(int k, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  return Coloring::from_function(k, [&](GridPoint) { return (rng() >> 63) ? -1 : 1; });
}

ChainSweep check_square_chains(const Coloring& c) {
  const CombinatorialSquare sq(c.k());
  ChainSweep out;
  out.colorings = 1;
  for (const Simplex& s : sq.simplexes()) {
    const auto n = simplex_gates(c, s).size();
    if (n != 0 && n != 2) ++out.gate_count_failures;
  }

  const auto gates = boundary_gates(c, sq.bounds());
  std::map<Face, std::size_t> gate_index;
  for (std::size_t n = 0; n < gates.size(); ++n) gate_index[gates[n]] = n;

  std::vector<std::optional<Chain>> chains(gates.size());
  for (std::size_t n = 0; n < gates.size(); ++n) {
    ++out.chains;
    try {
      Chain ch = trace_maximal_chain(sq, gates[n], c);
      if (!sq.is_boundary(ch.gates.back()) || !gate_index.contains(ch.gates.back())) {
        ++out.termination_failures;
      } else {
        chains[n] = std::move(ch);
      }
    } catch (const std::logic_error&) {
      ++out.termination_failures;
    }
  }

  // Owner of each simplex: the lesser boundary-gate index of its chain.
  std::vector<std::int64_t> owner(sq.simplex_count(), -1);
  for (std::size_t n = 0; n < gates.size(); ++n) {
    if (!chains[n]) continue;
    const std::size_t far = gate_index.at(chains[n]->gates.back());
    const auto& other = chains[far];
    if (!other || !std::equal(chains[n]->simplexes.begin(), chains[n]->simplexes.end(),
                              other->simplexes.rbegin(), other->simplexes.rend())) {
      ++out.reversal_failures;
    }
    const auto id = static_cast<std::int64_t>(std::min(n, far));
    for (const Simplex& s : chains[n]->simplexes) {
      auto& slot = owner[sq.simplex_index(s)];
      if (slot >= 0 && slot != id) ++out.overlap_failures;
      slot = id;
    }
  }
  return out;
}

namespace serial {

Coloring sample_coloring(int k, const CircleMapCandidate& candidate) {
  return Coloring::from_function(k, [&](GridPoint p) {
    const auto v = detail::sample_vertex(k, candidate, p.i, p.j);
    if (!v) throw detail::undefined_at(k, p);
    return *v;
  });
}

std::vector<std::uint8_t> dilation_mask(const PointSet& set, double epsilon, int reference_resolution) {
  const int side = reference_resolution + 1;
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(side) * side, 0);
  for (int p = 0; p < side; ++p) {
    for (int q = 0; q < side; ++q) {
      const Point2 g{static_cast<double>(p) / reference_resolution, static_cast<double>(q) / reference_resolution};
      for (const Point2& x : set.points) {
        if (distance(set.metric, g, x) <= epsilon) {
          mask[static_cast<std::size_t>(p) * side + q] = 1;
          break;
        }
      }
    }
  }
  return mask;
}

MeanScan scan_mean_candidate(const CircleMapCandidate& candidate, int k) {
  MeanScan scan;
  scan.k = k;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) detail::scan_cell(candidate, k, i, j, scan);
  return scan;
}

LemmaSweep verify_lemma_exhaustive(int k, GridPoint a, GridPoint b) {
  const std::uint64_t count = detail::lemma_count(k, a, b);
  const Rectangle r = Rectangle::spanning(a, b);
  LemmaSweep out;
  out.checked = count;
  for (std::uint64_t index = 0; index < count; ++index) {
    if (detail::lemma_holds(k, a, b, r, index)) {
      ++out.found;
    } else if (!out.first_failure) {
      out.first_failure = index;
    }
  }
  return out;
}

ChainSweep sweep_random_colorings(int k, std::uint64_t count, std::uint64_t seed) {
  ChainSweep total;
  for (std::uint64_t n = 0; n < count; ++n) detail::add(total, check_square_chains(random_coloring(k, seed, n)));
  return total;
}

}  // namespace serial
}  // namespace chaintrace
