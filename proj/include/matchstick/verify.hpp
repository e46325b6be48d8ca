#pragma once

#include <string>
#include <vector>

#include "matchstick/geometry.hpp"
#include "matchstick/model.hpp"

namespace matchstick {

struct Tolerances {
  /// Max allowed |length - 1| in matchstick units.
  double eps_length = 1e-6;
  /// Min clearance between non-adjacent edges, distinct vertices, and a
  /// vertex and a non-incident edge.
  double eps_separation = 1e-4;

  static Tolerances refined() { return {1e-6, 1e-4}; }
  static Tolerances raw() { return {1e-3, 1e-4}; }
};

enum class Classification {
  FourRegular,
  TwoFourRegular,
  OtherMatchstick,
  NotMatchstick,
};

struct EdgePairViolation {
  Index edge_a = 0;
  Index edge_b = 0;
  double distance = 0;
};

struct VertexViolation {
  enum class Kind { VertexVertex, VertexEdge };
  Kind kind = Kind::VertexVertex;
  Index vertex = 0;
  /// Second vertex (VertexVertex) or edge index (VertexEdge).
  Index other = 0;
  double distance = 0;
};

struct VerificationReport {
  Index vertex_count = 0;
  Index edge_count = 0;

  bool unit_length_ok = true;
  Index worst_edge = -1;
  double worst_deviation = 0;

  bool crossing_ok = true;
  std::vector<EdgePairViolation> crossings;

  bool vertex_clearance_ok = true;
  std::vector<VertexViolation> clearance_violations;

  DegreeProfile profile;
  Classification classification = Classification::NotMatchstick;
  /// Number of degree-2 vertices; meaningful for TwoFourRegular.
  Index degree_two_count = 0;

  /// Smallest clearance found between non-adjacent edges (audit value).
  double min_edge_clearance = 0;

  bool is_matchstick() const { return classification != Classification::NotMatchstick; }
  std::string summary() const;
};

std::string to_string(Classification c);

VerificationReport verify_matchstick(const EmbeddedGraph& g, const Tolerances& tol = {});

}  // namespace matchstick
