#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "chaintrace/candidates.hpp"
#include "chaintrace/grid.hpp"

namespace chaintrace {

// A total map f: V(k) -> {-1, +1}.
class Coloring {
 public:
  // rows[j][i] is the color of GridPoint (i, j); rows has k+1 rows of k+1
  // entries each. Throws KTooSmall, ShapeMismatch or BadValue.
  static Coloring from_rows(int k, const std::vector<std::vector<int>>& rows);
  static Coloring from_function(int k, const std::function<int(GridPoint)>& f);
  static Coloring constant(int k, int value);

  int k() const { return k_; }
  int at(GridPoint p) const { return values_[index(p)]; }
  int at(int i, int j) const { return at(GridPoint{i, j}); }
  bool is_gate(const Face& f) const { return at(f.first()) != at(f.second()); }

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  Coloring(int k, std::vector<std::int8_t> values) : k_(k), values_(std::move(values)) {}
  std::size_t index(GridPoint p) const { return static_cast<std::size_t>(p.j) * (k_ + 1) + p.i; }

  int k_ = 0;
  std::vector<std::int8_t> values_;
};

inline Coloring make_coloring(int k, const std::vector<std::vector<int>>& rows) {
  return Coloring::from_rows(k, rows);
}

// Faces of s whose endpoints carry different colors; always 0 or 2 of them.
InlineVec<Face, 3> simplex_gates(const Coloring& c, const Simplex& s);

// Colors vertex (i, j) by -1 iff the candidate's output at (i/k mod 1, j/k mod 1)
// lies in [1/4, 3/4], i.e. cos(2 pi theta) <= 0. Throws EvaluationFailure
// naming the first undefined sample point.
Coloring sample_coloring(int k, const CircleMapCandidate& candidate);

struct SideGates {
  // Lattice position along the side (i for bottom/top, j for left/right) of
  // the lower endpoint of each gate, listed counterclockwise from (0,0).
  std::vector<int> bottom, right, top, left;
};

struct ColoringDiagnostics {
  bool symmetric = false;
  bool doubly_periodic = false;
  SideGates gates;
};

ColoringDiagnostics coloring_diagnostics(const Coloring& c);

}  // namespace chaintrace
