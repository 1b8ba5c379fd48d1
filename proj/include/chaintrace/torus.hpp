#pragma once

#include <vector>

#include "chaintrace/chain.hpp"
#include "chaintrace/coloring.hpp"

namespace chaintrace {

// D^2(k) with (0, j) ~ (k, j) and (i, 0) ~ (i, k). Simplex bases live in
// [0, k)^2; every face has exactly two cofaces.
class TorusSurface {
 public:
  // Throws KTooSmall.
  explicit TorusSurface(int k);

  int k() const { return k_; }

  // Throws NotPeriodic unless c agrees across identified vertices.
  void require_periodic(const Coloring& c) const;

 private:
  int k_;
};

struct TorusCycle {
  Chain chain;  // surface Torus, closed
  Winding winding;
};

struct TorusStep {
  Face exit_gate;  // in the coordinates of the current simplex
  Simplex next;
  Face next_entry;  // exit_gate in the coordinates of `next`
  Winding crossing;
};

// Continuation across an interior or seam face; never exits.
TorusStep continue_on_torus(const TorusSurface& t, const Simplex& s, const Face& entry, const Coloring& c);

// Closed chain through `start`, entering the lexicographically least coface
// of start. Throws NotPeriodic or NotAGate.
TorusCycle trace_torus_cycle(const TorusSurface& t, const Face& start, const Coloring& c);

// Every gated simplex in exactly one cycle. Each cycle starts at its least
// simplex, entered through that simplex's lesser gate; cycles are listed in
// order of their starting simplex. Throws NotPeriodic.
std::vector<TorusCycle> all_torus_cycles(const TorusSurface& t, const Coloring& c);

}  // namespace chaintrace
