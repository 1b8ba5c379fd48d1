#include <cmath>
#include <random>
#include <set>

#include "doctest.h"

#include "chaintrace/error.hpp"
#include "chaintrace/limits.hpp"

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

// Grid points within epsilon of the set, by direct double loop.
std::vector<std::array<int, 2>> dilation(const PointSet& set, double eps, int K) {
  std::vector<std::array<int, 2>> out;
  for (int p = 0; p <= K; ++p) {
    for (int q = 0; q <= K; ++q) {
      const Point2 g{static_cast<double>(p) / K, static_cast<double>(q) / K};
      bool near = false;
      for (const Point2& x : set.points) near = near || distance(set.metric, g, x) <= eps;
      if (near) out.push_back({p, q});
    }
  }
  return out;
}

PointSet random_set(std::mt19937_64& rng, Metric metric, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PointSet set{metric, {}};
  for (std::size_t t = 0; t < n; ++t) set.points.push_back({u(rng), u(rng)});
  return set;
}

}  // namespace

TEST_CASE("distance metrics") {
  CHECK(distance(Metric::Euclidean, {0.0, 0.0}, {0.3, 0.4}) == doctest::Approx(0.5));
  CHECK(distance(Metric::Torus, {0.05, 0.0}, {0.95, 0.0}) == doctest::Approx(0.1));
  CHECK(distance(Metric::Torus, {0.0, 0.0}, {1.0, 1.0}) == doctest::Approx(0.0));
  CHECK(distance(Metric::Euclidean, {0.05, 0.0}, {0.95, 0.0}) == doctest::Approx(0.9));
}

TEST_CASE("upper_limit_approx validates its arguments") {
  const std::vector<PointSet> one{{Metric::Euclidean, {{0.5, 0.5}}}};
  CHECK(code_of([] { upper_limit_approx({}, 0.1, 10); }) == Errc::EmptySequence);
  CHECK(code_of([&] { upper_limit_approx(one, 0.0, 10); }) == Errc::BadEpsilon);
  CHECK(code_of([&] { upper_limit_approx(one, -1.0, 10); }) == Errc::BadEpsilon);
  CHECK(code_of([&] { upper_limit_approx(one, 0.1, 0); }) == Errc::BadParams);
  CHECK(code_of([&] { upper_limit_approx(one, 0.1, 10, 0.0); }) == Errc::BadParams);
  const std::vector<PointSet> mixed{{Metric::Euclidean, {{0.5, 0.5}}}, {Metric::Torus, {{0.5, 0.5}}}};
  CHECK(code_of([&] { upper_limit_approx(mixed, 0.1, 10); }) == Errc::BadInput);
  const std::vector<PointSet> outside{{Metric::Euclidean, {{1.5, 0.5}}}};
  CHECK(code_of([&] { upper_limit_approx(outside, 0.1, 10); }) == Errc::BadInput);
}

TEST_CASE("single point: the grid points of its closed epsilon-ball") {
  const std::vector<PointSet> seq{{Metric::Euclidean, {{0.5, 0.5}}}};
  const auto ls = upper_limit_approx(seq, 0.1, 10);
  // (5,5) and its four axis neighbours at distance exactly 0.1
  CHECK(ls.grid_points == std::vector<std::array<int, 2>>{{4, 5}, {5, 4}, {5, 5}, {5, 6}, {6, 5}});
  CHECK(ls.point(2) == Point2{0.5, 0.5});
}

TEST_CASE("constant sequences give the epsilon-dilation exactly") {
  std::mt19937_64 rng(5);
  for (Metric metric : {Metric::Euclidean, Metric::Torus}) {
    for (int round = 0; round < 10; ++round) {
      const auto set = random_set(rng, metric, 5 + round * 7);
      for (std::size_t m : {1u, 4u, 9u}) {
        const std::vector<PointSet> seq(m, set);
        const auto ls = upper_limit_approx(seq, 0.07, 40);
        CHECK(ls.grid_points == dilation(set, 0.07, 40));
      }
    }
  }
}

TEST_CASE("alternating sequences contain both neighbourhoods") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 8; ++round) {
    const auto a = random_set(rng, Metric::Euclidean, 6);
    const auto b = random_set(rng, Metric::Euclidean, 6);
    for (std::size_t m : {2u, 3u, 7u, 63u}) {
      std::vector<PointSet> seq;
      for (std::size_t n = 0; n < m; ++n) seq.push_back(n % 2 == 0 ? a : b);
      const auto ls = upper_limit_approx(seq, 0.05, 32);
      std::set<std::array<int, 2>> got(ls.grid_points.begin(), ls.grid_points.end());
      for (const auto& g : dilation(a, 0.05, 32)) CHECK(got.contains(g));
      for (const auto& g : dilation(b, 0.05, 32)) CHECK(got.contains(g));
    }
  }
}

TEST_CASE("points seen in less than the tail fraction are dropped") {
  const PointSet left{Metric::Euclidean, {{0.0, 0.0}}};
  const PointSet right{Metric::Euclidean, {{1.0, 1.0}}};
  // tail of 4 sets is indices 2..4: left, right, right
  const std::vector<PointSet> seq{left, left, right, right};
  const auto ls = upper_limit_approx(seq, 0.01, 10, 0.6);
  CHECK(ls.grid_points == std::vector<std::array<int, 2>>{{10, 10}});
  const auto loose = upper_limit_approx(seq, 0.01, 10, 0.3);
  CHECK(loose.grid_points == std::vector<std::array<int, 2>>{{0, 0}, {10, 10}});
}

TEST_CASE("connectivity_check") {
  CHECK(code_of([] { connectivity_check({Metric::Euclidean, {}}, 0.1); }) == Errc::EmptySet);
  CHECK(code_of([] { connectivity_check({Metric::Euclidean, {{0.1, 0.1}}}, 0.0); }) == Errc::BadEpsilon);

  PointSet line{Metric::Euclidean, {}};
  for (int n = 0; n <= 20; ++n) line.points.push_back({n / 20.0, 0.5});
  CHECK(connectivity_check(line, 0.05 + 1e-12) == 1);
  CHECK(connectivity_check(line, 0.049) == 21);

  const PointSet seam{Metric::Torus, {{0.01, 0.5}, {0.99, 0.5}}};
  CHECK(connectivity_check(seam, 0.03) == 1);
  CHECK(connectivity_check(PointSet{Metric::Euclidean, seam.points}, 0.03) == 2);
}

TEST_CASE("connectivity_check agrees with an all-pairs search") {
  std::mt19937_64 rng(13);
  for (Metric metric : {Metric::Euclidean, Metric::Torus}) {
    for (int round = 0; round < 30; ++round) {
      const auto set = random_set(rng, metric, 40);
      const double eps = 0.05 + 0.01 * (round % 10);
      std::vector<int> label(set.points.size(), -1);
      int comps = 0;
      for (std::size_t s = 0; s < set.points.size(); ++s) {
        if (label[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        label[s] = comps;
        while (!stack.empty()) {
          const auto a = stack.back();
          stack.pop_back();
          for (std::size_t b = 0; b < set.points.size(); ++b) {
            if (label[b] < 0 && distance(metric, set.points[a], set.points[b]) <= eps) {
              label[b] = comps;
              stack.push_back(b);
            }
          }
        }
        ++comps;
      }
      CHECK(connectivity_check(set, eps) == comps);
    }
  }
}
