#include <doctest.h>

#include <cmath>

#include "matchstick/corpus.hpp"
#include "matchstick/error.hpp"
#include "matchstick/ingest.hpp"
#include "matchstick/verify.hpp"
#include "support.hpp"

using namespace matchstick;
using namespace testing_support;

namespace {

const char* kTriangle =
    "# unit triangle\n"
    "! name tri\n"
    "! claimed_vertices 3\n"
    "0 0 10 0\n"
    "10 0 5 8.660254\n"
    "5 8.660254 0 0\n";

}  // namespace

TEST_CASE("parse a small file") {
  const auto f = parse_segment_file(kTriangle);
  CHECK(f.segments.size() == 3);
  CHECK(f.name() == "tri");
  CHECK(f.claimed_vertices() == 3);
  CHECK_FALSE(f.claimed_profile().has_value());
  CHECK(f.segments[1][3] == doctest::Approx(8.660254));
}

TEST_CASE("parse errors carry the line number") {
  const std::string text = "! name bad\n0 0 1 0\n1 0 2\n";
  try {
    parse_segment_file(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.code() == ErrorCode::MalformedLine);
  }
  CHECK_THROWS_AS(parse_segment_file("! name x\n0 0 1 0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_segment_file("! name x\n0 0 1 zero\n"), ParseError);
  CHECK_THROWS_AS(parse_segment_file("! name x\n0 0 1 inf\n"), ParseError);
  try {
    parse_segment_file("0 0 1 0\n");
    FAIL("expected missing metadata");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingMetadata);
  }
  CHECK_THROWS_AS(parse_segment_file("! name empty\n"), Error);
  CHECK_THROWS_AS(parse_segment_file("! name x\n! claimed_profile 3-regular\n0 0 1 0\n"), Error);
}

TEST_CASE("build a triangle") {
  const auto g = build_graph(parse_segment_file(kTriangle));
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.name() == "tri");
  CHECK(g.unit() == doctest::Approx(10.0).epsilon(1e-6));
}

TEST_CASE("merge errors") {
  // Two endpoints 0.015 apart: each forms its own cluster but the centers
  // are within 2 * eps.
  const auto amb = parse_segment_file("! name amb\n0 0 10 0\n10.015 0 20 0\n");
  try {
    build_graph(amb);
    FAIL("expected ambiguous merge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbiguousMerge);
  }
  const auto deg = parse_segment_file("! name deg\n0 0 10 0\n3 3 3.001 3\n");
  try {
    build_graph(deg);
    FAIL("expected degenerate segment");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateSegment);
  }
  CHECK_THROWS_AS(build_graph(parse_segment_file(kTriangle), MergePolicy{0.0}), Error);
  CHECK_THROWS_AS(build_graph(parse_segment_file(kTriangle), MergePolicy{5.0}), Error);
}

TEST_CASE("unit estimate") {
  std::vector<SegmentRecord> five{{0, 0, 5, 0}, {0, 0, 3, 4}, {1, 1, 1, 6}};
  CHECK(estimate_unit(five) == doctest::Approx(5.0));
  std::vector<SegmentRecord> pair{{0, 0, 1, 0}, {0, 0, 3, 0}};
  CHECK(estimate_unit(pair) == doctest::Approx(2.0));
  const auto f = load_corpus_file("fig1a");
  CHECK(estimate_unit(f.segments) == doctest::Approx(43.77).epsilon(1e-3));
}

TEST_CASE("corpus files match their metadata") {
  const auto names = corpus_names();
  CHECK(names.size() == 21);
  for (const auto& name : names) {
    CAPTURE(name);
    const auto f = load_corpus_file(name);
    const auto g = build_graph(f);
    REQUIRE(f.claimed_vertices().has_value());
    CHECK(g.vertex_count() == *f.claimed_vertices());
    const auto p = degree_profile(g);
    if (*f.claimed_profile() == "4-regular") {
      CHECK(p.is_four_regular());
    } else {
      CHECK(p.is_two_four_regular());
      CHECK_FALSE(p.is_four_regular());
    }
    CHECK(max_unit_deviation(f.segments, estimate_unit(f.segments)) <= 1e-3);
  }
}

TEST_CASE("corpus counts") {
  CHECK(load_corpus_file("fig2a").segments.size() == 42);
  const auto g1a = load_corpus_graph("fig1a");
  CHECK(g1a.vertex_count() == 52);
  CHECK(g1a.edge_count() == 104);
  const auto g5b = load_corpus_graph("fig5b");
  CHECK(g5b.vertex_count() == 5);
  CHECK(g5b.edge_count() == 6);
  CHECK(degree_profile(g5b).counts == std::map<Index, Index>{{2, 4}, {4, 1}});
}

TEST_CASE("emit and rebuild round trip") {
  std::mt19937_64 rng(3);
  int tested = 0;
  for (int trial = 0; tested < 40 && trial < 400; ++trial) {
    auto g = random_graph(rng, 4 + trial % 12, 0.4, 50.0);
    if (g.edge_count() == 0) continue;
    // Isolated vertices do not survive a segment list.
    if (std::ranges::any_of(g.degrees(), [](Index d) { return d == 0; })) continue;
    double dmin = 1e300;
    for (Index i = 0; i < g.vertex_count(); ++i) {
      for (Index j = i + 1; j < g.vertex_count(); ++j) dmin = std::min(dmin, (g.vertex(i) - g.vertex(j)).norm());
    }
    if (dmin <= 0.5) continue;
    const auto text = emit_segments(g.with_name("rt"), {{"claimed_vertices", std::to_string(g.vertex_count())}});
    const auto f = parse_segment_file(text);
    CHECK(f.name() == "rt");
    const auto h = build_graph(f);
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edge_count() == g.edge_count());
    CHECK(degree_profile(h) == degree_profile(g));
    ++tested;
  }
  CHECK(tested == 40);
}

TEST_CASE("corpus round trip through the emitter") {
  for (const char* name : {"fig1a", "fig2f", "fig5b"}) {
    const auto g = load_corpus_graph(name);
    const auto h = build_graph(parse_segment_file(emit_segments(g)));
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edge_count() == g.edge_count());
    CHECK(degree_profile(h) == degree_profile(g));
  }
}
