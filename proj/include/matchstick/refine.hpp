#pragma once

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

#include "matchstick/model.hpp"

namespace matchstick {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Edge length minus one, in matchstick units, in edge order.
template <typename Scalar>
Vector<Scalar> residuals(const BasicEmbeddedGraph<Scalar>& g) {
  Vector<Scalar> r(g.edge_count());
  for (Index i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    r(i) = (g.vertex(e.u) - g.vertex(e.v)).norm() / g.unit() - Scalar(1);
  }
  return r;
}

/// Jacobian of the edge lengths (matchstick units) with respect to the
/// normalized coordinates, e x 2v with columns (x0, y0, x1, y1, ...).
/// Row for edge (u, w) holds the unit direction from w to u at u's columns
/// and its negation at w's. This is also the rigidity matrix.
template <typename Scalar>
Matrix<Scalar> residual_jacobian(const BasicEmbeddedGraph<Scalar>& g) {
  Matrix<Scalar> J = Matrix<Scalar>::Zero(g.edge_count(), 2 * g.vertex_count());
  for (Index i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    const Point2<Scalar> d = g.vertex(e.u) - g.vertex(e.v);
    const Scalar len = d.norm();
    if (!(len > Scalar(0))) {
      throw Error(ErrorCode::ZeroLengthEdge, "edge " + std::to_string(i) + " has zero length");
    }
    const Point2<Scalar> dir = d / len;
    J.template block<1, 2>(i, 2 * e.u) = dir.transpose();
    J.template block<1, 2>(i, 2 * e.v) = -dir.transpose();
  }
  return J;
}

enum class Axis { X = 0, Y = 1 };

struct PinnedCoordinate {
  Index vertex = 0;
  Axis axis = Axis::X;
  friend bool operator==(const PinnedCoordinate&, const PinnedCoordinate&) = default;
};

struct RefineOptions {
  int max_iterations = 200;
  /// Stop when max |edge length - 1| (and every coincidence gap) is below this.
  double target_residual = 1e-12;
  /// Initial damping of the Levenberg-Marquardt step; never below 1e-12.
  double damping = 1e-6;
  /// Coordinates held fixed. nullopt pins vertex 0 fully and one coordinate
  /// of a neighbour, which removes the three rigid-body motions.
  std::optional<std::vector<PinnedCoordinate>> pinned;
};

struct RefineResult {
  EmbeddedGraph graph;
  int iterations = 0;
  double initial_residual = 0;
  double final_residual = 0;
  /// Largest distance between vertices required to coincide.
  double final_coincidence_gap = 0;
  bool converged = false;
};

/// Default rigid-body pins for g (see RefineOptions::pinned).
std::vector<PinnedCoordinate> default_pins(const EmbeddedGraph& g);

/// Damped Gauss-Newton polish of the coordinates so every edge has unit
/// length. `coincidences` lists vertex pairs that must end at the same
/// point; they stay separate indices in the result.
RefineResult refine(const EmbeddedGraph& g, const RefineOptions& opts = {},
                    const std::vector<std::pair<Index, Index>>& coincidences = {});

}  // namespace matchstick
