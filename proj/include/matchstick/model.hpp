#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matchstick/error.hpp"

namespace matchstick {

using Index = Eigen::Index;

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

/// Vertex coordinates, one row per vertex. Row-major so that the flattened
/// storage is (x0, y0, x1, y1, ...), the column order of the length Jacobian.
template <typename Scalar>
using Coordinates = Eigen::Matrix<Scalar, Eigen::Dynamic, 2, Eigen::RowMajor>;

/// Unordered vertex pair; stored with u < v.
struct Edge {
  Index u = 0;
  Index v = 0;

  Edge() = default;
  Edge(Index a, Index b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool has(Index x) const { return u == x || v == x; }
  Index other(Index x) const { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Embedded graph: vertex positions in drawing units plus an edge list.
///
/// Values are immutable once constructed; every transformation in this
/// library returns a new graph. `unit` is the drawing length that counts as
/// one matchstick, so ingested figure data keeps its original coordinates.
template <typename Scalar>
class BasicEmbeddedGraph {
 public:
  using scalar_type = Scalar;

  BasicEmbeddedGraph() = default;

  BasicEmbeddedGraph(Coordinates<Scalar> vertices, std::vector<Edge> edges,
                     Scalar unit = Scalar(1), std::string name = {})
      : vertices_(std::move(vertices)),
        edges_(std::move(edges)),
        unit_(unit),
        name_(std::move(name)) {
    validate();
  }

  Index vertex_count() const { return vertices_.rows(); }
  Index edge_count() const { return static_cast<Index>(edges_.size()); }

  const Coordinates<Scalar>& vertices() const { return vertices_; }
  Point2<Scalar> vertex(Index i) const { return vertices_.row(i).transpose(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(Index i) const { return edges_.at(static_cast<std::size_t>(i)); }
  Scalar unit() const { return unit_; }
  const std::string& name() const { return name_; }

  std::vector<Index> degrees() const {
    std::vector<Index> deg(static_cast<std::size_t>(vertex_count()), 0);
    for (const Edge& e : edges_) {
      ++deg[static_cast<std::size_t>(e.u)];
      ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
  }

  /// Vertices of degree 2, ascending. These are the join points ("slots")
  /// used by compositions.
  std::vector<Index> degree_two_vertices() const {
    std::vector<Index> out;
    const auto deg = degrees();
    for (std::size_t i = 0; i < deg.size(); ++i) {
      if (deg[i] == 2) out.push_back(static_cast<Index>(i));
    }
    return out;
  }

  std::vector<std::vector<Index>> adjacency() const {
    std::vector<std::vector<Index>> adj(static_cast<std::size_t>(vertex_count()));
    for (const Edge& e : edges_) {
      adj[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    return adj;
  }

  bool is_connected() const {
    if (vertex_count() == 0) return true;
    const auto adj = adjacency();
    std::vector<char> seen(adj.size(), 0);
    std::vector<Index> stack{0};
    seen[0] = 1;
    Index reached = 1;
    while (!stack.empty()) {
      const Index x = stack.back();
      stack.pop_back();
      for (Index y : adj[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == vertex_count();
  }

  BasicEmbeddedGraph with_vertices(Coordinates<Scalar> vertices) const {
    return BasicEmbeddedGraph(std::move(vertices), edges_, unit_, name_);
  }
  BasicEmbeddedGraph with_vertices(Coordinates<Scalar> vertices, Scalar unit) const {
    return BasicEmbeddedGraph(std::move(vertices), edges_, unit, name_);
  }
  BasicEmbeddedGraph with_name(std::string name) const {
    return BasicEmbeddedGraph(vertices_, edges_, unit_, std::move(name));
  }

  template <typename Other>
  BasicEmbeddedGraph<Other> cast() const {
    return BasicEmbeddedGraph<Other>(vertices_.template cast<Other>(), edges_,
                                     static_cast<Other>(unit_), name_);
  }

 private:
  void validate() const {
    using std::isfinite;
    if (!(unit_ > Scalar(0)) || !isfinite(unit_)) {
      throw Error(ErrorCode::InvalidGraph, "unit must be a positive finite number");
    }
    if (!vertices_.allFinite()) {
      throw Error(ErrorCode::InvalidGraph, "vertex coordinates must be finite");
    }
    std::set<Edge> seen;
    for (const Edge& e : edges_) {
      if (e.u < 0 || e.v >= vertex_count()) {
        throw Error(ErrorCode::InvalidGraph, "edge index out of range");
      }
      if (e.u == e.v) throw Error(ErrorCode::InvalidGraph, "self-loop");
      if (!seen.insert(e).second) throw Error(ErrorCode::InvalidGraph, "duplicate edge");
    }
  }

  Coordinates<Scalar> vertices_;
  std::vector<Edge> edges_;
  Scalar unit_ = Scalar(1);
  std::string name_;
};

using EmbeddedGraph = BasicEmbeddedGraph<double>;

/// Histogram degree -> number of vertices with that degree.
struct DegreeProfile {
  std::map<Index, Index> counts;

  Index count(Index degree) const {
    auto it = counts.find(degree);
    return it == counts.end() ? 0 : it->second;
  }
  Index vertex_total() const {
    Index n = 0;
    for (const auto& [d, c] : counts) n += c;
    return n;
  }
  bool is_four_regular() const { return counts.size() == 1 && counts.begin()->first == 4; }
  /// Every degree is 2 or 4 (a 4-regular profile qualifies too).
  bool is_two_four_regular() const {
    return !counts.empty() &&
           std::all_of(counts.begin(), counts.end(),
                       [](const auto& kv) { return kv.first == 2 || kv.first == 4; });
  }

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

template <typename Scalar>
DegreeProfile degree_profile(const BasicEmbeddedGraph<Scalar>& g) {
  DegreeProfile p;
  for (Index d : g.degrees()) ++p.counts[d];
  return p;
}

struct EdgeCountIdentity {
  enum class Kind { FourRegular, TwoDegreeTwo };
  Kind kind = Kind::FourRegular;
  Index expected_edges = 0;
  Index actual_edges = 0;
  bool holds() const { return expected_edges == actual_edges; }
};

/// e = 2v for 4-regular graphs, e = 2v - 2 for (2,4)-regular graphs with
/// exactly two degree-2 vertices. Other profiles throw ProfileNotApplicable.
template <typename Scalar>
EdgeCountIdentity edge_count_identity(const BasicEmbeddedGraph<Scalar>& g) {
  const DegreeProfile p = degree_profile(g);
  const Index v = g.vertex_count();
  EdgeCountIdentity out;
  out.actual_edges = g.edge_count();
  if (p.is_four_regular()) {
    out.kind = EdgeCountIdentity::Kind::FourRegular;
    out.expected_edges = 2 * v;
  } else if (p.is_two_four_regular() && p.count(2) == 2) {
    out.kind = EdgeCountIdentity::Kind::TwoDegreeTwo;
    out.expected_edges = 2 * v - 2;
  } else {
    throw Error(ErrorCode::ProfileNotApplicable,
                "degree profile is neither 4-regular nor (2,4)-regular with two degree-2 vertices");
  }
  return out;
}

/// Edge length in matchstick units.
template <typename Scalar>
Scalar edge_length(const BasicEmbeddedGraph<Scalar>& g, Index edge_index) {
  if (edge_index < 0 || edge_index >= g.edge_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "edge index out of range");
  }
  const Edge& e = g.edge(edge_index);
  return (g.vertex(e.u) - g.vertex(e.v)).norm() / g.unit();
}

template <typename Scalar>
std::vector<Scalar> edge_lengths(const BasicEmbeddedGraph<Scalar>& g) {
  std::vector<Scalar> out;
  out.reserve(g.edges().size());
  for (Index i = 0; i < g.edge_count(); ++i) out.push_back(edge_length(g, i));
  return out;
}

/// Rescale coordinates so that unit == 1.
template <typename Scalar>
BasicEmbeddedGraph<Scalar> normalize(const BasicEmbeddedGraph<Scalar>& g) {
  return g.with_vertices(g.vertices() / g.unit(), Scalar(1));
}

/// Apply x -> A x + t to every vertex. A need not be orthogonal.
template <typename Scalar, typename MatA, typename VecT>
BasicEmbeddedGraph<Scalar> transformed(const BasicEmbeddedGraph<Scalar>& g,
                                       const Eigen::MatrixBase<MatA>& linear,
                                       const Eigen::MatrixBase<VecT>& translation) {
  Coordinates<Scalar> out = g.vertices() * linear.transpose();
  out.rowwise() += translation.transpose();
  return g.with_vertices(std::move(out));
}

template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> rotation2(Scalar angle) {
  using std::cos;
  using std::sin;
  Eigen::Matrix<Scalar, 2, 2> r;
  r << cos(angle), -sin(angle), sin(angle), cos(angle);
  return r;
}

/// Mirror x -> -x.
template <typename Scalar>
BasicEmbeddedGraph<Scalar> reflected(const BasicEmbeddedGraph<Scalar>& g) {
  Coordinates<Scalar> out = g.vertices();
  out.col(0) = -out.col(0);
  return g.with_vertices(std::move(out));
}

template <typename Scalar>
Point2<Scalar> centroid(const BasicEmbeddedGraph<Scalar>& g) {
  return g.vertices().colwise().mean().transpose();
}

/// Signed side (+1 left, -1 right, 0 on the line) of the vertex centroid
/// relative to the directed line from vertex a to vertex b.
template <typename Scalar>
int body_side(const BasicEmbeddedGraph<Scalar>& g, Index a, Index b) {
  const Point2<Scalar> d = g.vertex(b) - g.vertex(a);
  const Point2<Scalar> c = centroid(g) - g.vertex(a);
  const Scalar cross = d.x() * c.y() - d.y() * c.x();
  return (cross > Scalar(0)) - (cross < Scalar(0));
}

}  // namespace matchstick
