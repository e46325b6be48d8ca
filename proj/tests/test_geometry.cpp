#include <doctest.h>

#include <limits>
#include <random>

#include "matchstick/geometry.hpp"
#include "oracles.hpp"

using namespace matchstick;
using Seg = Segment<double>;
using P = Point2<double>;

namespace {

Seg seg(double x1, double y1, double x2, double y2) { return {P(x1, y1), P(x2, y2)}; }

}  // namespace

TEST_CASE("conflict examples") {
  CHECK(segments_conflict(seg(0, 0, 1, 1), seg(0, 1, 1, 0), std::nullopt, 1e-4).conflict);
  const auto clear = segments_conflict(seg(0, 0, 1, 0), seg(0, 1, 1, 1), std::nullopt, 0.05);
  CHECK_FALSE(clear.conflict);
  CHECK(clear.distance == doctest::Approx(1.0));
  CHECK(segments_conflict(seg(0, 0, 1, 0), seg(0, 0, 0.5, 0), SharedEnd{0, 0}, 1e-4).conflict);
}

TEST_CASE("adjacent edges conflict only when folded onto each other") {
  const double eps = 1e-4;
  for (double deg : {60.0, 90.0, 1.0, 0.1}) {
    const double t = deg * M_PI / 180.0;
    CHECK_FALSE(segments_conflict(seg(0, 0, 1, 0), seg(0, 0, std::cos(t), std::sin(t)), SharedEnd{0, 0}, eps).conflict);
  }
  // asin(1e-4) is about 0.0057 degrees.
  const double t = 0.001 * M_PI / 180.0;
  CHECK(segments_conflict(seg(0, 0, 1, 0), seg(0, 0, std::cos(t), std::sin(t)), SharedEnd{0, 0}, eps).conflict);
  // Straight continuation through the shared vertex is not an overlap.
  CHECK_FALSE(segments_conflict(seg(0, 0, 1, 0), seg(1, 0, 2, 0), SharedEnd{1, 0}, eps).conflict);
}

TEST_CASE("touching and near-miss pairs") {
  // T-junction: endpoint on the interior of the other segment.
  CHECK(segments_conflict(seg(0, 0, 2, 0), seg(1, 0, 1, 1), std::nullopt, 1e-4).conflict);
  // Collinear disjoint.
  CHECK_FALSE(segments_conflict(seg(0, 0, 1, 0), seg(1.5, 0, 2.5, 0), std::nullopt, 0.4).conflict);
  CHECK(segments_conflict(seg(0, 0, 1, 0), seg(1.5, 0, 2.5, 0), std::nullopt, 0.6).conflict);
  // Collinear overlapping.
  CHECK(segments_conflict(seg(0, 0, 1, 0), seg(0.5, 0, 2, 0), std::nullopt, 1e-4).conflict);
}

TEST_CASE("conflict test agrees with a sampled-distance oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> eps_dist(0.005, 0.2);
  const double guard = 10 * std::numeric_limits<double>::epsilon();
  int compared = 0, excluded = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    const Seg a = seg(u(rng), u(rng), u(rng), u(rng));
    const Seg b = seg(u(rng), u(rng), u(rng), u(rng));
    const double eps = eps_dist(rng);
    const auto r = segments_conflict(a, b, std::nullopt, eps);
    const auto r2 = segments_conflict(b, a, std::nullopt, eps);
    REQUIRE(r.conflict == r2.conflict);

    // Cheap pre-screen: far pairs need no grid.
    const double lower = r.distance;
    if (lower > eps + guard && lower > 0.3) {
      ++compared;
      continue;
    }
    const double ds = oracles::sampled_distance(a, b);
    const double bound = oracles::grid_error_bound(a, b) + guard;
    // The true distance lies in [ds - bound, ds].
    if (ds < eps - guard) {
      CHECK(r.conflict);
      ++compared;
    } else if (ds - bound > eps + guard) {
      CHECK_FALSE(r.conflict);
      ++compared;
    } else {
      ++excluded;
    }
    CHECK(r.distance <= ds + guard);
    CHECK(r.distance >= ds - bound);
  }
  CHECK(compared > 90000);
  MESSAGE("oracle comparisons: ", compared, ", guard-band exclusions: ", excluded);
}

TEST_CASE("adjacent conflict is symmetric") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const P s(u(rng), u(rng));
    const Seg a{s, P(u(rng), u(rng))};
    const Seg b{P(u(rng), u(rng)), s};
    const auto r1 = segments_conflict(a, b, SharedEnd{0, 1}, 0.05);
    const auto r2 = segments_conflict(b, a, SharedEnd{1, 0}, 0.05);
    CHECK(r1.conflict == r2.conflict);
    CHECK(r1.distance == r2.distance);
  }
}

TEST_CASE("float instantiation") {
  const Segment<float> a{Point2<float>(0, 0), Point2<float>(1, 1)};
  const Segment<float> b{Point2<float>(0, 1), Point2<float>(1, 0)};
  CHECK(segments_conflict(a, b, std::nullopt, 1e-3f).conflict);
}
