#pragma once

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

#include "matchstick/model.hpp"
#include "matchstick/refine.hpp"

namespace matchstick {

/// One part of a composition. Its degree-2 vertices, in ascending index
/// order, are addressed as slots 0, 1, ...
struct PartSpec {
  std::string label;
  EmbeddedGraph graph;
  /// Mirror the part (x -> -x) before it is placed.
  bool reflect = false;
};

/// Glue slot `slot_a` of part `part_a` to slot `slot_b` of part `part_b`.
struct Identification {
  Index part_a = 0;
  Index slot_a = 0;
  Index part_b = 0;
  Index slot_b = 0;
};

struct CompositionPlan {
  std::string name;
  std::vector<PartSpec> parts;
  std::vector<Identification> identifications;

  Index subgraph_count() const { return static_cast<Index>(parts.size()); }
};

/// Throws InvalidPlan unless every slot exists (so has degree 2), no slot is
/// used twice, and the parts are connected through identifications.
void validate_plan(const CompositionPlan& plan);

/// Sum of part vertex counts minus the number of identifications.
Index predicted_vertex_count(const CompositionPlan& plan);

/// Part profiles summed; each identification turns two degree-2 vertices
/// into one degree-4 vertex.
DegreeProfile predicted_degree_profile(const CompositionPlan& plan);

Index predicted_edge_count(const CompositionPlan& plan);

enum class MirrorMode {
  /// Reflection across the line through the two join vertices.
  Line,
  /// Rotation by 180 degrees about their midpoint (swaps the two).
  Point,
};

struct RigidMotion {
  Eigen::Matrix2d linear = Eigen::Matrix2d::Identity();
  Eigen::Vector2d translation = Eigen::Vector2d::Zero();

  Eigen::Vector2d operator()(const Eigen::Vector2d& p) const { return linear * p + translation; }
};

/// The isometry used by mirror_double for join vertices a and b.
RigidMotion mirror_transform(const EmbeddedGraph& g, Index a, Index b, MirrorMode mode);

/// g together with its image under mirror_transform, glued at a and b.
/// The result has 2v - 2 vertices; the first v are g's, the rest are the
/// images of g's other vertices in index order. Not verified.
EmbeddedGraph mirror_double(const EmbeddedGraph& g, Index a, Index b, MirrorMode mode,
                            double axis_clearance = 1e-4);

/// Same, using g's two degree-2 vertices as a and b.
EmbeddedGraph mirror_double(const EmbeddedGraph& g, MirrorMode mode, double axis_clearance = 1e-4);

/// Place the parts, solve for unit edges with every identified pair
/// coincident, then merge identified vertices. Throws RealizationFailed
/// when the solver does not converge. The result has unit 1 and is not
/// verified.
///
/// Layout: a simple cycle of three or more parts is laid out on a cyclic
/// polygon whose sides are the parts' join gaps, each part mapped onto its
/// side. Otherwise parts are placed in breadth-first order, each by the
/// rotation and midpoint alignment that carries its first two anchored join
/// vertices onto their partners.
EmbeddedGraph realize(const CompositionPlan& plan, const RefineOptions& opts = {});

/// Ring of parts with two join vertices each: part i's slot 1 is glued to
/// part i+1's slot 0, cyclically. Reflect flags put every part outside the
/// polygon of join points.
CompositionPlan ring_plan(std::vector<PartSpec> parts, std::string name = {});

/// Two end parts with `spacer_count` spacers between them.
struct ChainSpec {
  PartSpec left;
  PartSpec right;
  /// Four join vertices, in two pairs: one glued to the previous part and
  /// one to the next.
  PartSpec spacer;
  Index spacer_count = 0;

  /// v_left + v_right + n * v_spacer - 2 (n + 1).
  Index predicted_vertex_count() const;
};

/// Plan for a chain. Part orientations are chosen so that consecutive parts
/// lie on opposite sides of the join pair they share; incoming reflect flags
/// are ignored.
CompositionPlan chain_plan(const ChainSpec& spec, std::string name = {});

EmbeddedGraph chain_extend(const ChainSpec& spec, const RefineOptions& opts = {});

/// Pairing of a spacer's four join slots into (in0, in1) and (out0, out1).
struct SpacerPairs {
  Index in0 = 0, in1 = 0, out0 = 0, out1 = 0;
};
SpacerPairs spacer_pairs(const EmbeddedGraph& spacer);

/// Vertices of a convex polygon inscribed in a circle with the given side
/// lengths, counter-clockwise; side i joins vertex i and vertex i+1.
std::vector<Eigen::Vector2d> cyclic_polygon(const std::vector<double>& sides);

}  // namespace matchstick
