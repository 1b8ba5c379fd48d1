#include "chaintrace/torus.hpp"

#include <stdexcept>
#include <string>

#include "chaintrace/error.hpp"

namespace chaintrace {

namespace {

struct Wrapped {
  Simplex simplex;
  int di = 0;
  int dj = 0;
};

Wrapped wrap(int k, const Simplex& s) {
  Wrapped w{s, 0, 0};
  if (s.base.i >= k) w.di = -k;
  if (s.base.i < 0) w.di = k;
  if (s.base.j >= k) w.dj = -k;
  if (s.base.j < 0) w.dj = k;
  w.simplex.base = {s.base.i + w.di, s.base.j + w.dj};
  return w;
}

}  // namespace

TorusSurface::TorusSurface(int k) : k_(k) {
  if (k < 2) throw Error(Errc::KTooSmall, "k = " + std::to_string(k) + " but k > 1 is required");
}

void TorusSurface::require_periodic(const Coloring& c) const {
  if (c.k() != k_) throw Error(Errc::BadInput, "coloring resolution does not match the torus");
  for (int n = 0; n <= k_; ++n) {
    if (c.at(0, n) != c.at(k_, n) || c.at(n, 0) != c.at(n, k_)) {
      throw Error(Errc::NotPeriodic, "coloring differs across the seam at index " + std::to_string(n));
    }
  }
}

TorusStep continue_on_torus(const TorusSurface& t, const Simplex& s, const Face& entry, const Coloring& c) {
  if (!s.has_face(entry)) throw Error(Errc::BadInput, "entry is not a face of the simplex");
  if (!c.is_gate(entry)) throw Error(Errc::NotAGate, "entry joins equal colors");
  const auto gates = simplex_gates(c, s);
  const Face exit = gates[0] == entry ? gates[1] : gates[0];
  const auto cofaces = lattice_cofaces(exit);
  const Simplex across = cofaces[0] == s ? cofaces[1] : cofaces[0];
  const Wrapped w = wrap(t.k(), across);
  // Shifting by -k means the step left the square through the right or top seam.
  const Winding crossing{w.di < 0 ? 1 : (w.di > 0 ? -1 : 0), w.dj < 0 ? 1 : (w.dj > 0 ? -1 : 0)};
  return {exit, w.simplex, exit.translated(w.di, w.dj), crossing};
}

namespace {

TorusCycle trace_from(const TorusSurface& t, const Simplex& origin, const Face& origin_entry, const Coloring& c) {
  const int k = t.k();
  TorusCycle cycle;
  cycle.chain.k = k;
  cycle.chain.surface = Surface::Torus;
  cycle.chain.closed = true;

  Simplex current = origin;
  Face entry = origin_entry;
  const std::size_t limit = 2 * static_cast<std::size_t>(k) * k;
  do {
    if (cycle.chain.simplexes.size() >= limit) throw std::logic_error("torus chain failed to close");
    cycle.chain.simplexes.push_back(current);
    cycle.chain.gates.push_back(entry);
    const TorusStep step = continue_on_torus(t, current, entry, c);
    cycle.winding.h += step.crossing.h;
    cycle.winding.v += step.crossing.v;
    current = step.next;
    entry = step.next_entry;
  } while (!(current == origin && entry == origin_entry));

  cycle.chain.winding = cycle.winding;
  return cycle;
}

}  // namespace

TorusCycle trace_torus_cycle(const TorusSurface& t, const Face& start, const Coloring& c) {
  t.require_periodic(c);
  const int k = t.k();
  if (!Rectangle{{0, 0}, {k, k}}.contains(start)) throw Error(Errc::FaceOutOfRange, "start face is off the grid");
  if (!c.is_gate(start)) throw Error(Errc::NotAGate, "start face joins equal colors");

  const auto cofaces = lattice_cofaces(start);
  Wrapped first = wrap(k, cofaces[0]);
  const Wrapped second = wrap(k, cofaces[1]);
  if (second.simplex < first.simplex) first = second;
  return trace_from(t, first.simplex, start.translated(first.di, first.dj), c);
}

std::vector<TorusCycle> all_torus_cycles(const TorusSurface& t, const Coloring& c) {
  t.require_periodic(c);
  const CombinatorialSquare sq(t.k());
  std::vector<bool> visited(sq.simplex_count(), false);
  std::vector<TorusCycle> cycles;
  for (std::size_t n = 0; n < sq.simplex_count(); ++n) {
    if (visited[n]) continue;
    const Simplex s = sq.simplex_at(n);
    const auto gates = simplex_gates(c, s);
    if (gates.empty()) continue;
    TorusCycle cycle = trace_from(t, s, std::min(gates[0], gates[1]), c);
    for (const Simplex& member : cycle.chain.simplexes) visited[sq.simplex_index(member)] = true;
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace chaintrace
