#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "chaintrace/candidates.hpp"
#include "chaintrace/error.hpp"
#include "chaintrace/kernels.hpp"
#include "chaintrace/torus.hpp"

using namespace chaintrace;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::BadInput;
}

Coloring band(int k) {
  return Coloring::from_function(k, [k](GridPoint p) { return (p.j == 0 || p.j == k) ? -1 : 1; });
}

std::set<oracle::Tri> tri_set(const Chain& chain) {
  std::set<oracle::Tri> out;
  for (const Simplex& s : chain.simplexes) out.insert(oracle::as_tri(s));
  return out;
}

// Cycles as (simplex set, winding up to sign), for comparison with the oracle.
using CycleKey = std::pair<std::set<oracle::Tri>, std::array<int, 2>>;

std::array<int, 2> canonical_sign(std::array<int, 2> w) {
  if (w[0] < 0 || (w[0] == 0 && w[1] < 0)) return {-w[0], -w[1]};
  return w;
}

std::set<CycleKey> keys(const std::vector<TorusCycle>& cycles) {
  std::set<CycleKey> out;
  for (const auto& c : cycles) out.insert({tri_set(c.chain), canonical_sign({c.winding.h, c.winding.v})});
  return out;
}

std::set<CycleKey> keys(const std::vector<oracle::TorusCycle>& cycles) {
  std::set<CycleKey> out;
  for (const auto& c : cycles) out.insert({c.simplexes, canonical_sign(c.winding)});
  return out;
}

std::size_t gated_simplexes(const Coloring& c) {
  std::size_t n = 0;
  for (const Simplex& s : build_square(c.k()).simplexes()) n += simplex_gates(c, s).size() == 2 ? 1 : 0;
  return n;
}

void check_partition(const Coloring& c, const std::vector<TorusCycle>& cycles) {
  std::set<Simplex> seen;
  std::size_t total = 0;
  for (const auto& cycle : cycles) {
    CHECK(cycle.chain.closed);
    CHECK(cycle.chain.surface == Surface::Torus);
    CHECK(cycle.chain.gates.size() == cycle.chain.simplexes.size());
    for (const Simplex& s : cycle.chain.simplexes) CHECK(seen.insert(s).second);
    total += cycle.chain.simplexes.size();
  }
  CHECK(total == gated_simplexes(c));
}

}  // namespace

TEST_CASE("constant and non-periodic colorings") {
  const TorusSurface t(4);
  CHECK(all_torus_cycles(t, Coloring::constant(4, 1)).empty());
  const auto skew = Coloring::from_function(4, [](GridPoint p) { return p.i == 0 ? -1 : 1; });
  CHECK(code_of([&] { all_torus_cycles(t, skew); }) == Errc::NotPeriodic);
  CHECK(code_of([&] { trace_torus_cycle(t, Face::between({0, 0}, {1, 0}), skew); }) == Errc::NotPeriodic);
  CHECK(code_of([&] { trace_torus_cycle(t, Face::between({1, 1}, {2, 1}), band(4)); }) == Errc::NotAGate);
  CHECK(code_of([] { TorusSurface bad(1); }) == Errc::KTooSmall);
}

TEST_CASE("band coloring, k = 4: two horizontal cycles") {
  const TorusSurface t(4);
  const auto c = band(4);
  const auto cycles = all_torus_cycles(t, c);
  REQUIRE(cycles.size() == 2);
  for (const auto& cycle : cycles) {
    CHECK(std::abs(cycle.winding.h) == 1);
    CHECK(cycle.winding.v == 0);
    CHECK(cycle.chain.winding == cycle.winding);
  }
  check_partition(c, cycles);
  CHECK(keys(cycles) == keys(oracle::torus_cycles(c)));
}

TEST_CASE("trace_torus_cycle returns the cycle through its start") {
  const TorusSurface t(4);
  const auto c = band(4);
  const Face start = Face::between({2, 0}, {2, 1});
  const auto cycle = trace_torus_cycle(t, start, c);
  bool has_start = false;
  for (const Simplex& s : cycle.chain.simplexes)
    for (const Face& f : s.faces()) has_start = has_start || f == start;
  CHECK(has_start);
  CHECK(std::abs(cycle.winding.h) == 1);
}

TEST_CASE("lift-average cycles match the brute-force tracer") {
  const auto cand = builtin_circle_candidate("lift-average");
  for (int k : {4, 8, 16}) {
    const auto c = sample_coloring(k, cand);
    const auto cycles = all_torus_cycles(TorusSurface(k), c);
    check_partition(c, cycles);
    CHECK(keys(cycles) == keys(oracle::torus_cycles(c)));
  }
  // The positive region is two corner triangles pinched at the corner, so
  // the single gate cycle is contractible.
  const auto c4 = sample_coloring(4, cand);
  const auto cycles4 = all_torus_cycles(TorusSurface(4), c4);
  REQUIRE(cycles4.size() == 1);
  CHECK(cycles4[0].chain.simplexes.size() == 14);
  CHECK(cycles4[0].winding == Winding{0, 0});
}

TEST_CASE("first-projection: two vertical cycles") {
  const auto cand = builtin_circle_candidate("first-projection");
  for (int k : {4, 16}) {
    const auto c = sample_coloring(k, cand);
    const auto cycles = all_torus_cycles(TorusSurface(k), c);
    REQUIRE(cycles.size() == 2);
    for (const auto& cy : cycles) {
      CHECK(cy.winding.h == 0);
      CHECK(std::abs(cy.winding.v) == 1);
    }
    check_partition(c, cycles);
    CHECK(keys(cycles) == keys(oracle::torus_cycles(c)));
  }
}

TEST_CASE("random periodic colorings match the brute-force tracer") {
  for (std::uint64_t n = 0; n < 60; ++n) {
    const int k = 2 + static_cast<int>(n % 6);
    const auto raw = random_coloring(k, 41, n);
    const auto c = Coloring::from_function(k, [&](GridPoint p) { return raw.at(p.i % k, p.j % k); });
    const auto cycles = all_torus_cycles(TorusSurface(k), c);
    check_partition(c, cycles);
    if (k >= 3) CHECK(keys(cycles) == keys(oracle::torus_cycles(c)));
  }
}

TEST_CASE("seam consistency: crossings re-enter at the same height") {
  for (const char* name : {"lift-average", "shorter-arc-midpoint"}) {
    const int k = 16;
    const auto c = sample_coloring(k, builtin_circle_candidate(name));
    const TorusSurface t(k);
    for (const auto& cycle : all_torus_cycles(t, c)) {
      const auto& ss = cycle.chain.simplexes;
      const auto& gs = cycle.chain.gates;
      Winding total;
      for (std::size_t n = 0; n < ss.size(); ++n) {
        const auto step = continue_on_torus(t, ss[n], gs[n], c);
        const std::size_t next = (n + 1) % ss.size();
        CHECK(step.next == ss[next]);
        CHECK(step.next_entry == gs[next]);
        const Face& out = step.exit_gate;
        const Face& in = step.next_entry;
        CHECK(in.first().i == out.first().i + k * step.crossing.h * -1);
        CHECK(in.first().j == out.first().j + k * step.crossing.v * -1);
        CHECK(c.at(in.first()) == c.at(out.first()));
        CHECK(c.at(in.second()) == c.at(out.second()));
        total.h += step.crossing.h;
        total.v += step.crossing.v;
      }
      CHECK(total == cycle.winding);
    }
  }
}

TEST_CASE("reflection covariance for symmetric colorings") {
  for (const char* name : {"lift-average", "shorter-arc-midpoint"}) {
    for (int k : {8, 16}) {
      const auto c = sample_coloring(k, builtin_circle_candidate(name));
      const auto cycles = all_torus_cycles(TorusSurface(k), c);
      std::set<std::pair<std::set<Simplex>, std::array<int, 2>>> all;
      for (const auto& cy : cycles) {
        all.insert({std::set<Simplex>(cy.chain.simplexes.begin(), cy.chain.simplexes.end()),
                    canonical_sign({cy.winding.h, cy.winding.v})});
      }
      for (const auto& cy : cycles) {
        std::set<Simplex> swapped;
        for (const Simplex& s : cy.chain.simplexes) swapped.insert(Simplex{{s.base.j, s.base.i}, 1 - s.orientation});
        CHECK(all.contains({swapped, canonical_sign({cy.winding.v, cy.winding.h})}));
      }
    }
  }
}

TEST_CASE("all_torus_cycles is canonical: each cycle starts at its least simplex") {
  const auto c = sample_coloring(16, builtin_circle_candidate("shorter-arc-midpoint"));
  const auto cycles = all_torus_cycles(TorusSurface(16), c);
  for (std::size_t n = 0; n < cycles.size(); ++n) {
    const auto& ss = cycles[n].chain.simplexes;
    CHECK(ss.front() == *std::min_element(ss.begin(), ss.end()));
    if (n > 0) CHECK(cycles[n - 1].chain.simplexes.front() < ss.front());
  }
}
