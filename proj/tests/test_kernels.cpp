#include <random>
#include <set>

#include "doctest.h"

#include "chaintrace/candidates.hpp"
#include "chaintrace/error.hpp"
#include "chaintrace/kernels.hpp"

using namespace chaintrace;

namespace {

bool same(const ScanBest& a, const ScanBest& b) { return a.deviation == b.deviation && a.at == b.at; }

PointSet random_set(std::uint64_t seed, Metric metric, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PointSet set{metric, {}};
  for (std::size_t t = 0; t < n; ++t) set.points.push_back({u(rng), u(rng)});
  return set;
}

}  // namespace

TEST_CASE("sample_coloring: serial equals parallel") {
  for (const char* name : {"shorter-arc-midpoint", "lift-average", "first-projection"}) {
    const auto cand = builtin_circle_candidate(name);
    for (int k : {2, 7, 64, 129}) CHECK(serial::sample_coloring(k, cand) == parallel::sample_coloring(k, cand));
  }
}

TEST_CASE("scan_mean_candidate: serial equals parallel") {
  for (const char* name : {"shorter-arc-midpoint", "lift-average", "first-projection", "constant"}) {
    const auto cand = builtin_circle_candidate(name);
    for (int k : {2, 8, 33, 100}) {
      const auto s = serial::scan_mean_candidate(cand, k);
      const auto p = parallel::scan_mean_candidate(cand, k);
      CHECK(same(s.symmetry, p.symmetry));
      CHECK(same(s.retraction, p.retraction));
      CHECK(s.undefined == p.undefined);
    }
  }
  CircleMapCandidate holey{"holey", {}, [](double x, double y) -> std::optional<double> {
                             if (x > 0.5 && y > 0.5) return std::nullopt;
                             return 0.0;
                           }, {}};
  const auto s = serial::scan_mean_candidate(holey, 10);
  const auto p = parallel::scan_mean_candidate(holey, 10);
  REQUIRE(s.undefined.has_value());
  CHECK(*s.undefined == GridPoint{6, 6});
  CHECK(s.undefined == p.undefined);
}

TEST_CASE("dilation_mask: bucketed parallel equals brute force") {
  for (Metric metric : {Metric::Euclidean, Metric::Torus}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const auto set = random_set(seed, metric, 30 + 20 * seed);
      for (double eps : {0.01, 0.05, 0.2, 0.6}) {
        CHECK(serial::dilation_mask(set, eps, 50) == parallel::dilation_mask(set, eps, 50));
      }
    }
  }
}

TEST_CASE("verify_lemma_exhaustive: serial equals parallel at any thread count") {
  const auto s = serial::verify_lemma_exhaustive(2, {0, 0}, {2, 2});
  for (int threads : {0, 1, 3}) {
    const auto p = parallel::verify_lemma_exhaustive(2, {0, 0}, {2, 2}, threads);
    CHECK(p.checked == s.checked);
    CHECK(p.found == s.found);
    CHECK(p.first_failure == s.first_failure);
  }
  const auto sub = parallel::verify_lemma_exhaustive(3, {1, 0}, {3, 2});
  CHECK(sub.checked == (std::uint64_t{1} << 15));
  CHECK(sub.ok());
}

TEST_CASE("sweep_random_colorings: serial equals parallel") {
  for (int k : {3, 10}) {
    const auto s = serial::sweep_random_colorings(k, 64, 77);
    const auto p = parallel::sweep_random_colorings(k, 64, 77);
    CHECK(s == p);
    CHECK(s.ok());
    CHECK(s.chains > 0);
  }
}

TEST_CASE("enumerated_coloring fixes f(b) = -f(a) and covers every free pattern") {
  const GridPoint a{0, 0};
  const GridPoint b{2, 2};
  std::set<std::vector<std::vector<int>>> seen;
  for (std::uint64_t n = 0; n < 256; ++n) {
    const auto c = enumerated_coloring(2, a, b, n);
    CHECK(c.at(a) == -c.at(b));
    seen.insert(c.rows());
  }
  CHECK(seen.size() == 256);
  CHECK(enumerated_coloring(2, a, b, 0) == Coloring::from_function(2, [&](GridPoint p) {
          return p == b ? -1 : 1;
        }));
}

TEST_CASE("random_coloring is a pure function of its arguments") {
  CHECK(random_coloring(9, 1, 2) == random_coloring(9, 1, 2));
  CHECK_FALSE(random_coloring(9, 1, 2) == random_coloring(9, 1, 3));
  CHECK_FALSE(random_coloring(9, 1, 2) == random_coloring(9, 2, 2));
}

TEST_CASE("check_square_chains flags nothing on valid colorings") {
  CHECK(check_square_chains(Coloring::constant(4, 1)).chains == 0);
  const auto split = check_square_chains(Coloring::from_function(2, [](GridPoint p) { return p.i == 0 ? -1 : 1; }));
  CHECK(split.chains == 2);
  CHECK(split.ok());
}
