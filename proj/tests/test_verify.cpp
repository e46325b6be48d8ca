#include <doctest.h>

#include <random>

#include "matchstick/corpus.hpp"
#include "matchstick/error.hpp"
#include "matchstick/refine.hpp"
#include "matchstick/verify.hpp"
#include "support.hpp"

using namespace matchstick;
using namespace testing_support;

namespace {

EmbeddedGraph refined_corpus(const std::string& name) {
  const auto r = refine(load_corpus_graph(name));
  REQUIRE(r.converged);
  return r.graph;
}

}  // namespace

TEST_CASE("triangle is a matchstick graph") {
  const auto rep = verify_matchstick(triangle(3.0), {1e-6, 0.05});
  CHECK(rep.is_matchstick());
  CHECK(rep.profile.counts == std::map<Index, Index>{{2, 3}});
  // Degrees drawn from {2, 4} only, so the profile counts as (2,4)-regular.
  CHECK(rep.classification == Classification::TwoFourRegular);
  CHECK(rep.degree_two_count == 3);

  // A unit path with a degree-1 end falls into the catch-all class.
  Coordinates<double> p(3, 2);
  p << 0, 0, 1, 0, 1.5, 0.8660254037844386;
  const auto path = verify_matchstick(EmbeddedGraph(p, {{0, 1}, {1, 2}}));
  CHECK(path.classification == Classification::OtherMatchstick);
  CHECK(path.summary() == "matchstick, 3 vertices");
}

TEST_CASE("refined corpus examples") {
  const auto a = verify_matchstick(refined_corpus("fig1a"));
  CHECK(a.classification == Classification::FourRegular);
  CHECK(a.summary() == "4-regular matchstick, 52 vertices");
  const auto h = verify_matchstick(refined_corpus("fig2h"));
  CHECK(h.classification == Classification::TwoFourRegular);
  CHECK(h.degree_two_count == 2);
  CHECK(h.summary() == "(2,4)-regular matchstick with 2 degree-2 vertices, 41 vertices");
}

TEST_CASE("displaced vertex breaks unit lengths") {
  const auto g = refined_corpus("fig1a");
  Coordinates<double> p = g.vertices();
  p(7, 0) += 0.1;
  const auto rep = verify_matchstick(g.with_vertices(p));
  CHECK_FALSE(rep.unit_length_ok);
  CHECK(rep.classification == Classification::NotMatchstick);
  CHECK(rep.summary() == "not-a-matchstick-graph");
  CHECK(g.edge(rep.worst_edge).has(7));
  CHECK(rep.worst_deviation > 0.01);
}

TEST_CASE("crossings are all listed") {
  // Two unit "X" shapes far apart, each a pair of crossing unit segments.
  const double s = std::sqrt(0.5) / 2;
  Coordinates<double> p(8, 2);
  p << -s, -s, s, s, -s, s, s, -s, 10 - s, -s, 10 + s, s, 10 - s, s, 10 + s, -s;
  const EmbeddedGraph g(p, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  const auto rep = verify_matchstick(g);
  CHECK(rep.unit_length_ok);
  CHECK_FALSE(rep.crossing_ok);
  CHECK(rep.crossings.size() == 2);
  CHECK(rep.classification == Classification::NotMatchstick);
}

TEST_CASE("vertex clearance") {
  // Two disjoint unit edges whose endpoints coincide in the plane.
  Coordinates<double> p(4, 2);
  p << 0, 0, 1, 0, 1, 0, 2, 0;
  const auto rep = verify_matchstick(EmbeddedGraph(p, {{0, 1}, {2, 3}}));
  CHECK_FALSE(rep.vertex_clearance_ok);
  CHECK_FALSE(rep.is_matchstick());
  bool saw_vv = false;
  for (const auto& v : rep.clearance_violations) saw_vv |= v.kind == VertexViolation::Kind::VertexVertex;
  CHECK(saw_vv);

  // Vertex 2 sits on the interior of edge 0-1.
  Coordinates<double> q(4, 2);
  q << 0, 0, 1, 0, 0.5, 0, 0.5, 1;
  const auto rep2 = verify_matchstick(EmbeddedGraph(q, {{0, 1}, {2, 3}}));
  CHECK_FALSE(rep2.vertex_clearance_ok);
  bool saw_ve = false;
  for (const auto& v : rep2.clearance_violations) saw_ve |= v.kind == VertexViolation::Kind::VertexEdge;
  CHECK(saw_ve);
}

TEST_CASE("tolerance validation") {
  CHECK_THROWS_AS(verify_matchstick(triangle(), {0.0, 1e-4}), Error);
  CHECK_THROWS_AS(verify_matchstick(triangle(), {0.2, 1e-4}), Error);
  CHECK_THROWS_AS(verify_matchstick(triangle(), {1e-6, 0.0}), Error);
  CHECK_THROWS_AS(verify_matchstick(triangle(), {1e-6, 0.6}), Error);
}

TEST_CASE("raw corpus meets loose tolerances, refined corpus meets tight ones") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const auto raw = load_corpus_graph(name);
    CHECK(verify_matchstick(raw, Tolerances::raw()).is_matchstick());
    const auto rep = verify_matchstick(refined_corpus(name));
    CHECK(rep.is_matchstick());
    CHECK(rep.min_edge_clearance > 1e-3);
  }
}

TEST_CASE("classification is not-a-matchstick iff a flag fails") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_graph(rng, 3 + trial % 6, 0.5, 1.5);
    const auto rep = verify_matchstick(g, {0.09, 1e-4});
    const bool flags = rep.unit_length_ok && rep.crossing_ok && rep.vertex_clearance_ok;
    CHECK(flags == rep.is_matchstick());
  }
}

TEST_CASE("reports are invariant under isometries") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  std::uniform_real_distribution<double> shift(-1000, 1000);
  for (const char* name : {"fig1d", "fig2f", "fig5b", "fig4a"}) {
    const auto g = refined_corpus(name);
    const auto base = verify_matchstick(g);
    for (int trial = 0; trial < 5; ++trial) {
      Eigen::Matrix2d m = rotation2(angle(rng));
      if (trial % 2) m.col(0) = -m.col(0);
      const auto h = transformed(g, m, Eigen::Vector2d(shift(rng), shift(rng)));
      const auto rep = verify_matchstick(h);
      CHECK(rep.classification == base.classification);
      CHECK(rep.unit_length_ok == base.unit_length_ok);
      CHECK(rep.crossings.size() == base.crossings.size());
      CHECK(rep.clearance_violations.size() == base.clearance_violations.size());
      CHECK(rep.profile == base.profile);
      CHECK(rep.worst_deviation < 1e-9);
      CHECK(rep.min_edge_clearance == doctest::Approx(base.min_edge_clearance).epsilon(1e-9));
    }
  }
}

TEST_CASE("unit is honoured") {
  const auto g = refined_corpus("fig2a");
  const auto scaled = g.with_vertices(g.vertices() * 37.5, 37.5);
  const auto rep = verify_matchstick(scaled);
  CHECK(rep.classification == Classification::TwoFourRegular);
}
