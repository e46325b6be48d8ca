#include <doctest.h>

#include <random>

#include "matchstick/corpus.hpp"
#include "matchstick/error.hpp"
#include "matchstick/refine.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace matchstick;
using namespace testing_support;

TEST_CASE("residual examples") {
  CHECK(residuals(triangle()).cwiseAbs().maxCoeff() < 1e-15);
  Coordinates<double> p(2, 2);
  p << 0, 0, 1.1, 0;
  const auto r = residuals(EmbeddedGraph(p, {{0, 1}}));
  REQUIRE(r.size() == 1);
  CHECK(r(0) == doctest::Approx(0.1));
  CHECK(residuals(load_corpus_graph("fig1a")).cwiseAbs().maxCoeff() <= 1e-3);
}

TEST_CASE("jacobian rows") {
  Coordinates<double> p(2, 2);
  p << 0, 0, 1, 0;
  const Matrix<double> j = residual_jacobian(EmbeddedGraph(p, {{0, 1}}));
  REQUIRE(j.rows() == 1);
  REQUIRE(j.cols() == 4);
  CHECK(j(0, 0) == -1);
  CHECK(j(0, 1) == 0);
  CHECK(j(0, 2) == 1);
  CHECK(j(0, 3) == 0);

  const auto g = refine(load_corpus_graph("fig2b")).graph;
  const Matrix<double> jg = residual_jacobian(g);
  for (Index i = 0; i < jg.rows(); ++i) CHECK(jg.row(i).norm() == doctest::Approx(std::sqrt(2.0)));

  Coordinates<double> z(2, 2);
  z << 1, 1, 1, 1;
  try {
    residual_jacobian(EmbeddedGraph(z, {{0, 1}}));
    FAIL("expected zero-length edge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroLengthEdge);
  }
}

TEST_CASE("jacobian matches central differences on random graphs") {
  std::mt19937_64 rng(101);
  const double h = 1e-7;
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(rng, 10, 0.4, 3.0);
    if (g.edge_count() == 0) continue;
    const Matrix<double> j = residual_jacobian(g);
    const Matrix<double> fd = oracles::finite_difference_jacobian(g, h);
    CHECK((fd - j).norm() / j.norm() <= 1e-6);
    ++checked;
  }
  CHECK(checked > 90);
}

TEST_CASE("exact triangle is a fixed point") {
  const auto r = refine(triangle());
  CHECK(r.converged);
  CHECK(r.iterations <= 1);
  CHECK(r.final_residual < 1e-15);
  CHECK((r.graph.vertices() - triangle().vertices()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("corpus refinement") {
  for (const char* name : {"fig1a", "fig1d"}) {
    CAPTURE(name);
    const auto r = refine(load_corpus_graph(name));
    CHECK(r.converged);
    CHECK(r.final_residual <= 1e-9);
    CHECK(r.final_residual <= r.initial_residual);
    CHECK(r.graph.unit() == 1.0);
    MESSAGE(name, ": ", r.iterations, " iterations");
  }
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const auto g = load_corpus_graph(name);
    const auto r = refine(g);
    CHECK(r.converged);
    CHECK(r.graph.edges() == g.edges());
    CHECK(r.graph.vertex_count() == g.vertex_count());
  }
}

TEST_CASE("refine is idempotent at convergence") {
  for (const char* name : {"fig2c", "fig3b", "fig5c"}) {
    const auto once = refine(load_corpus_graph(name));
    REQUIRE(once.converged);
    const auto twice = refine(once.graph);
    CHECK(twice.converged);
    CHECK((twice.graph.vertices() - once.graph.vertices()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("accepted steps never increase the residual norm") {
  const auto g = load_corpus_graph("fig4c");
  double previous = residuals(normalize(g)).norm();
  for (int k = 1; k <= 6; ++k) {
    RefineOptions o;
    o.max_iterations = k;
    const double now = residuals(refine(g, o).graph).norm();
    CHECK(now <= previous);
    previous = now;
  }
}

TEST_CASE("pins hold and coincidences close") {
  const auto g = load_corpus_graph("fig2a");
  RefineOptions o;
  o.pinned = std::vector<PinnedCoordinate>{{3, Axis::X}, {3, Axis::Y}, {5, Axis::X}};
  const auto r = refine(g, o);
  CHECK(r.converged);
  CHECK((r.graph.vertex(3) - normalize(g).vertex(3)).norm() == 0.0);
  CHECK(r.graph.vertex(5).x() == normalize(g).vertex(5).x());

  // Two unit edges whose tips should meet: a hinge closing onto itself.
  Coordinates<double> p(4, 2);
  p << 0, 0, 1, 0, 0.0, 0.1, 0.99, 0.2;
  const EmbeddedGraph two(p, {{0, 1}, {2, 3}});
  const auto c = refine(two, {}, {{0, 2}, {1, 3}});
  CHECK(c.converged);
  CHECK(c.final_coincidence_gap <= 1e-12);
  CHECK(c.graph.vertex_count() == 4);

  RefineOptions bad;
  bad.pinned = std::vector<PinnedCoordinate>{{99, Axis::X}};
  CHECK_THROWS_AS(refine(g, bad), Error);
}

TEST_CASE("non-convergence returns the best iterate") {
  // A unit triangle cannot have a fourth vertex at unit distance from all three.
  Coordinates<double> p(4, 2);
  p << 0, 0, 1, 0, 0.5, 0.8, 0.5, 0.3;
  const EmbeddedGraph k4(p, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  RefineOptions o;
  o.max_iterations = 30;
  const auto r = refine(k4, o);
  CHECK_FALSE(r.converged);
  CHECK(r.final_residual > 1e-3);
  CHECK(r.iterations <= 30);
}
