#include "chaintrace/chain.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "chaintrace/error.hpp"

namespace chaintrace {

namespace {

std::string show(GridPoint p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

std::string show(const Face& f) { return "[" + show(f.first()) + "," + show(f.second()) + "]"; }

std::size_t local_index(const Rectangle& r, const Simplex& s) {
  return (static_cast<std::size_t>(s.base.i - r.lo.i) * r.height() + (s.base.j - r.lo.j)) * 2 + s.orientation;
}

std::vector<Face> arc_faces(const std::vector<GridPoint>& path) {
  std::vector<Face> out;
  for (std::size_t n = 1; n < path.size(); ++n) out.push_back(Face::between(path[n - 1], path[n]));
  return out;
}

}  // namespace

Step continue_through(const Rectangle& region, const Simplex& s, const Face& entry, const Coloring& c) {
  if (!s.has_face(entry)) throw Error(Errc::BadInput, show(entry) + " is not a face of the simplex");
  if (!c.is_gate(entry)) throw Error(Errc::NotAGate, show(entry) + " joins equal colors");
  const auto gates = simplex_gates(c, s);
  const Face exit = gates[0] == entry ? gates[1] : gates[0];
  Step step{exit, std::nullopt};
  for (const Simplex& t : face_cofaces(region, exit))
    if (t != s) step.next = t;
  return step;
}

Step continue_through(const Simplex& s, const Face& entry, const Coloring& c) {
  return continue_through(Rectangle{{0, 0}, {c.k(), c.k()}}, s, entry, c);
}

Chain trace_maximal_chain(const Rectangle& region, const Face& start, const Coloring& c) {
  if (!region.on_boundary(start)) throw Error(Errc::NotOnBoundary, show(start) + " is not on the region boundary");
  if (!c.is_gate(start)) throw Error(Errc::NotAGate, show(start) + " joins equal colors");

  Chain chain;
  chain.k = c.k();
  chain.surface = Surface::Square;
  chain.gates.push_back(start);

  std::vector<bool> visited(static_cast<std::size_t>(region.width()) * region.height() * 2, false);
  Simplex current = face_cofaces(region, start)[0];
  Face entry = start;
  for (;;) {
    const auto slot = local_index(region, current);
    if (visited[slot]) throw std::logic_error("chain revisited a simplex");
    visited[slot] = true;
    chain.simplexes.push_back(current);
    const Step step = continue_through(region, current, entry, c);
    chain.gates.push_back(step.exit_gate);
    if (step.boundary_exit()) break;
    entry = step.exit_gate;
    current = *step.next;
  }
  return chain;
}

Chain trace_maximal_chain(const CombinatorialSquare& sq, const Face& start, const Coloring& c) {
  return trace_maximal_chain(sq.bounds(), start, c);
}

std::vector<Face> boundary_gates(const Coloring& c, const Rectangle& r) {
  std::vector<Face> out;
  const auto cycle = r.boundary_cycle();
  for (std::size_t n = 0; n < cycle.size(); ++n) {
    const GridPoint p = cycle[n];
    const GridPoint q = cycle[(n + 1) % cycle.size()];
    if (c.at(p) != c.at(q)) out.push_back(Face::between(p, q));
  }
  return out;
}

int ComponentPartition::class_of(GridPoint p) const {
  for (std::size_t n = 0; n < classes.size(); ++n)
    if (std::binary_search(classes[n].begin(), classes[n].end(), p)) return static_cast<int>(n);
  return -1;
}

ComponentPartition components(const Coloring& c, const Rectangle& r, Relation relation, const Chain* chain) {
  if (relation == Relation::Simeq && chain == nullptr) {
    throw Error(Errc::MissingChain, "the simeq relation needs a chain");
  }
  std::set<Face> blocked;
  if (relation == Relation::Simeq) {
    for (const Simplex& s : chain->simplexes)
      for (const Face& f : simplex_gates(c, s)) blocked.insert(f);
  }
  auto joined = [&](GridPoint p, GridPoint q) {
    if (!r.contains(q)) return false;
    if (relation == Relation::Approx) return c.at(p) == c.at(q);
    return !blocked.contains(Face::between(p, q));
  };

  const int w = r.width() + 1;
  const int h = r.height() + 1;
  auto index = [&](GridPoint p) { return static_cast<std::size_t>(p.i - r.lo.i) * h + (p.j - r.lo.j); };
  std::vector<int> label(static_cast<std::size_t>(w) * h, -1);

  ComponentPartition out;
  out.relation = relation;
  static constexpr int kSteps[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
  for (int i = r.lo.i; i <= r.hi.i; ++i) {
    for (int j = r.lo.j; j <= r.hi.j; ++j) {
      const GridPoint seed{i, j};
      if (label[index(seed)] >= 0) continue;
      const int id = static_cast<int>(out.classes.size());
      std::vector<GridPoint> members{seed};
      label[index(seed)] = id;
      for (std::size_t head = 0; head < members.size(); ++head) {
        const GridPoint p = members[head];
        for (const auto& d : kSteps) {
          const GridPoint q{p.i + d[0], p.j + d[1]};
          if (joined(p, q) && label[index(q)] < 0) {
            label[index(q)] = id;
            members.push_back(q);
          }
        }
      }
      std::sort(members.begin(), members.end());
      out.classes.push_back(std::move(members));
    }
  }
  return out;
}

Chain lemma_witness(const Coloring& c, const Rectangle& r, GridPoint a, GridPoint b) {
  const auto path = boundary_path(r, a, b);
  if (c.at(a) == c.at(b)) throw Error(Errc::SameColor, show(a) + " and " + show(b) + " carry the same color");

  const auto partition = components(c, r, Relation::Approx);
  const int target = partition.class_of(b);
  std::size_t t = 1;
  while (partition.class_of(path[t]) != target) ++t;
  // path[t-1] is outside b's class and adjacent to path[t], so they differ in color.
  const Face gate = Face::between(path[t - 1], path[t]);
  return trace_maximal_chain(r, gate, c);
}

bool meets_both_arcs(const Chain& chain, const Rectangle& r, GridPoint a, GridPoint b) {
  if (chain.simplexes.empty() || chain.gates.size() != chain.simplexes.size() + 1) return false;
  std::set<Simplex> seen;
  for (const Simplex& s : chain.simplexes)
    if (!r.contains(s) || !seen.insert(s).second) return false;
  const auto ab = arc_faces(boundary_path(r, a, b));
  const auto ba = arc_faces(boundary_path(r, b, a));
  auto on = [](const std::vector<Face>& arc, const Face& f) {
    return std::find(arc.begin(), arc.end(), f) != arc.end();
  };
  const Face& first = chain.gates.front();
  const Face& last = chain.gates.back();
  return (on(ab, first) && on(ba, last)) || (on(ba, first) && on(ab, last));
}

}  // namespace chaintrace
