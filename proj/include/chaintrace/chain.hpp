#pragma once

#include <optional>
#include <vector>

#include "chaintrace/coloring.hpp"
#include "chaintrace/grid.hpp"

namespace chaintrace {

enum class Surface { Square, Torus };

// Signed seam crossings of a closed torus chain: h counts rightward minus
// leftward crossings of the vertical seam, v upward minus downward crossings
// of the horizontal seam.
struct Winding {
  int h = 0;
  int v = 0;

  friend constexpr bool operator==(const Winding&, const Winding&) = default;
};

// Simplexes linked by shared gates. On the square, gates has one more entry
// than simplexes: gates[t] is the entry gate of simplexes[t] and gates.back()
// the exit gate. On the torus (closed), gates[t] is the entry gate of
// simplexes[t] expressed in that simplex's own coordinates, and the exit gate
// of the last simplex is gates[0] shifted across the seam.
struct Chain {
  int k = 0;
  Surface surface = Surface::Square;
  std::vector<Simplex> simplexes;
  std::vector<Face> gates;
  bool closed = false;
  std::optional<Winding> winding;
};

struct Step {
  Face exit_gate;
  std::optional<Simplex> next;  // empty at a boundary exit

  bool boundary_exit() const { return !next.has_value(); }
};

// Leaves s through its gate other than `entry`. Throws NotAGate if entry is
// not a gate of s, BadInput if entry is not a face of s.
Step continue_through(const Rectangle& region, const Simplex& s, const Face& entry, const Coloring& c);
Step continue_through(const Simplex& s, const Face& entry, const Coloring& c);

// Maximal chain entering the region through the boundary gate `start`.
// Throws NotAGate or NotOnBoundary.
Chain trace_maximal_chain(const Rectangle& region, const Face& start, const Coloring& c);
Chain trace_maximal_chain(const CombinatorialSquare& sq, const Face& start, const Coloring& c);

// Gates on the boundary of r, counterclockwise from r.lo.
std::vector<Face> boundary_gates(const Coloring& c, const Rectangle& r);

enum class Relation { Approx, Simeq };

struct ComponentPartition {
  Relation relation = Relation::Approx;
  std::vector<std::vector<GridPoint>> classes;  // sorted; ordered by least vertex

  // Index of the class containing p, or -1.
  int class_of(GridPoint p) const;
};

// Approx: components of the face graph of r restricted to equal-colored
// endpoints. Simeq: components of the face graph of r without the faces that
// are gates of simplexes of `chain`. Throws MissingChain.
ComponentPartition components(const Coloring& c, const Rectangle& r, Relation relation,
                              const Chain* chain = nullptr);

// Chain meeting both boundary arcs ab and ba of r: the maximal chain through
// the gate where the walk from a toward b first enters the Approx-class of b.
// Throws SameColor, DegenerateRectangle or NotACorner.
Chain lemma_witness(const Coloring& c, const Rectangle& r, GridPoint a, GridPoint b);

// True if the chain lies in r, has no repeated simplex, and has one end gate on
// the arc a->b and the other on the arc b->a.
bool meets_both_arcs(const Chain& chain, const Rectangle& r, GridPoint a, GridPoint b);

}  // namespace chaintrace
