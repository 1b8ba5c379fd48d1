#pragma once

// Per-item bodies shared by the serial and OpenMP kernels.

#include <optional>
#include <string>

#include "chaintrace/chain.hpp"
#include "chaintrace/error.hpp"
#include "chaintrace/kernels.hpp"

namespace chaintrace::detail {

// Sample value at lattice vertex (i, j): arguments reduced mod 1.
inline std::optional<int> sample_vertex(int k, const CircleMapCandidate& candidate, int i, int j) {
  const double x = wrap_unit(static_cast<double>(i % k) / k);
  const double y = wrap_unit(static_cast<double>(j % k) / k);
  const auto theta = candidate.eval(x, y);
  if (!theta) return std::nullopt;
  const double t = wrap_unit(*theta);
  return (t >= 0.25 && t <= 0.75) ? -1 : 1;
}

inline Error undefined_at(int k, GridPoint p) {
  return Error(Errc::EvaluationFailure, "candidate undefined at lattice point (" + std::to_string(p.i) + "," +
                                            std::to_string(p.j) + ") of k = " + std::to_string(k));
}

inline void scan_cell(const CircleMapCandidate& candidate, int k, int i, int j, MeanScan& scan) {
  const double x = static_cast<double>(i) / k;
  const double y = static_cast<double>(j) / k;
  const GridPoint at{i, j};
  const auto xy = candidate.eval(x, y);
  const auto yx = candidate.eval(y, x);
  if (!xy || !yx) {
    const GridPoint bad = xy ? GridPoint{j, i} : at;
    if (!scan.undefined || bad < *scan.undefined) scan.undefined = bad;
    return;
  }
  const ScanBest sym{circle_distance(*xy, *yx), at};
  if (sym.beats(scan.symmetry)) scan.symmetry = sym;
  if (i == j) {
    const ScanBest ret{circle_distance(*xy, x), at};
    if (ret.beats(scan.retraction)) scan.retraction = ret;
  }
}

inline void merge_scan(MeanScan& into, const MeanScan& from) {
  if (from.symmetry.beats(into.symmetry)) into.symmetry = from.symmetry;
  if (from.retraction.beats(into.retraction)) into.retraction = from.retraction;
  if (from.undefined && (!into.undefined || *from.undefined < *into.undefined)) into.undefined = from.undefined;
}

inline bool lemma_holds(int k, GridPoint a, GridPoint b, const Rectangle& r, std::uint64_t index) {
  try {
    const Coloring c = enumerated_coloring(k, a, b, index);
    return meets_both_arcs(lemma_witness(c, r, a, b), r, a, b);
  } catch (const std::exception&) {
    return false;
  }
}

inline std::uint64_t lemma_count(int k, GridPoint a, GridPoint b) {
  const int free_bits = (k + 1) * (k + 1) - 1;
  if (free_bits > 40) throw Error(Errc::BadParams, "exhaustive enumeration is limited to 2^40 colorings");
  CombinatorialSquare sq(k);
  if (!sq.contains(a) || !sq.contains(b)) throw Error(Errc::NotACorner, "a and b must be lattice points");
  return std::uint64_t{1} << free_bits;
}

inline void add(ChainSweep& into, const ChainSweep& from) {
  into.colorings += from.colorings;
  into.chains += from.chains;
  into.gate_count_failures += from.gate_count_failures;
  into.termination_failures += from.termination_failures;
  into.overlap_failures += from.overlap_failures;
  into.reversal_failures += from.reversal_failures;
}

}  // namespace chaintrace::detail
