#include "matchstick/refine.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>

namespace matchstick {

namespace {

constexpr double kMinDamping = 1e-12;
constexpr double kMaxDamping = 1e16;

struct Problem {
  const std::vector<Edge>& edges;
  const std::vector<std::pair<Index, Index>>& coincidences;
  Index vertex_count;

  Index rows() const { return static_cast<Index>(edges.size() + 2 * coincidences.size()); }

  // Stacked residual: edge length errors, then (dx, dy) per coincidence.
  // Returns false when some edge has collapsed to zero length.
  bool residual(const Vector<double>& x, Vector<double>& r) const {
    r.resize(rows());
    Index k = 0;
    for (const Edge& e : edges) {
      const double len = std::hypot(x(2 * e.u) - x(2 * e.v), x(2 * e.u + 1) - x(2 * e.v + 1));
      if (!(len > 1e-12)) return false;
      r(k++) = len - 1.0;
    }
    for (const auto& [a, b] : coincidences) {
      r(k++) = x(2 * a) - x(2 * b);
      r(k++) = x(2 * a + 1) - x(2 * b + 1);
    }
    return true;
  }

  Matrix<double> jacobian(const Vector<double>& x) const {
    Matrix<double> J = Matrix<double>::Zero(rows(), 2 * vertex_count);
    Index k = 0;
    for (const Edge& e : edges) {
      Eigen::Vector2d d(x(2 * e.u) - x(2 * e.v), x(2 * e.u + 1) - x(2 * e.v + 1));
      d /= d.norm();
      J.block<1, 2>(k, 2 * e.u) = d.transpose();
      J.block<1, 2>(k, 2 * e.v) = -d.transpose();
      ++k;
    }
    for (const auto& [a, b] : coincidences) {
      J(k, 2 * a) = 1;
      J(k, 2 * b) = -1;
      J(k + 1, 2 * a + 1) = 1;
      J(k + 1, 2 * b + 1) = -1;
      k += 2;
    }
    return J;
  }

  double edge_max(const Vector<double>& r) const {
    const Index ne = static_cast<Index>(edges.size());
    return ne ? r.head(ne).cwiseAbs().maxCoeff() : 0.0;
  }

  double gap_max(const Vector<double>& r) const {
    double worst = 0;
    Index k = static_cast<Index>(edges.size());
    for (std::size_t c = 0; c < coincidences.size(); ++c, k += 2) {
      worst = std::max(worst, std::hypot(r(k), r(k + 1)));
    }
    return worst;
  }
};

}  // namespace

std::vector<PinnedCoordinate> default_pins(const EmbeddedGraph& g) {
  std::vector<PinnedCoordinate> pins;
  if (g.vertex_count() == 0) return pins;
  pins.push_back({0, Axis::X});
  pins.push_back({0, Axis::Y});
  const auto adj = g.adjacency();
  Index second = -1;
  if (!adj[0].empty()) second = adj[0].front();
  else if (g.vertex_count() > 1) second = 1;
  if (second >= 0) {
    const Point2<double> d = g.vertex(second) - g.vertex(0);
    // Rotation about vertex 0 moves `second` perpendicular to d.
    pins.push_back({second, std::abs(d.x()) >= std::abs(d.y()) ? Axis::Y : Axis::X});
  }
  return pins;
}

RefineResult refine(const EmbeddedGraph& input, const RefineOptions& opts,
                    const std::vector<std::pair<Index, Index>>& coincidences) {
  if (opts.max_iterations < 1 || !(opts.target_residual > 0)) {
    throw Error(ErrorCode::InvalidArgument, "max_iterations must be >= 1 and target_residual > 0");
  }
  const EmbeddedGraph g = normalize(input);
  const Index nv = g.vertex_count();
  for (const auto& [a, b] : coincidences) {
    if (a < 0 || b < 0 || a >= nv || b >= nv || a == b) {
      throw Error(ErrorCode::InvalidArgument, "bad coincidence pair");
    }
  }
  (void)residual_jacobian(g);  // rejects zero-length edges up front

  const Problem prob{g.edges(), coincidences, nv};
  const auto pins = opts.pinned ? *opts.pinned : default_pins(g);

  std::vector<Index> free_cols;
  {
    std::vector<char> fixed(static_cast<std::size_t>(2 * nv), 0);
    for (const auto& p : pins) {
      if (p.vertex < 0 || p.vertex >= nv) throw Error(ErrorCode::InvalidArgument, "pinned vertex out of range");
      fixed[static_cast<std::size_t>(2 * p.vertex + static_cast<Index>(p.axis))] = 1;
    }
    for (Index c = 0; c < 2 * nv; ++c) {
      if (!fixed[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    }
  }
  const Index nf = static_cast<Index>(free_cols.size());

  Vector<double> x = Eigen::Map<const Vector<double>>(g.vertices().data(), 2 * nv);
  Vector<double> r;
  prob.residual(x, r);
  double cost = r.squaredNorm();

  RefineResult out;
  out.initial_residual = prob.edge_max(r);
  auto done = [&](const Vector<double>& res) {
    return prob.edge_max(res) <= opts.target_residual && prob.gap_max(res) <= opts.target_residual;
  };

  double lambda = std::max(opts.damping, kMinDamping);
  int it = 0;
  Vector<double> x_new, r_new;
  while (!done(r) && it < opts.max_iterations && lambda <= kMaxDamping) {
    ++it;
    const Matrix<double> J_full = prob.jacobian(x);
    Matrix<double> J(J_full.rows(), nf);
    for (Index c = 0; c < nf; ++c) J.col(c) = J_full.col(free_cols[static_cast<std::size_t>(c)]);

    Vector<double> dx;
    if (J.rows() <= nf) {
      // Minimal-norm step for the underdetermined system.
      Matrix<double> A = J * J.transpose();
      A.diagonal().array() += lambda;
      dx = J.transpose() * A.ldlt().solve(-r);
    } else {
      Matrix<double> A = J.transpose() * J;
      A.diagonal().array() += lambda;
      dx = A.ldlt().solve(-(J.transpose() * r));
    }

    x_new = x;
    for (Index c = 0; c < nf; ++c) x_new(free_cols[static_cast<std::size_t>(c)]) += dx(c);

    if (dx.allFinite() && prob.residual(x_new, r_new) && r_new.squaredNorm() < cost) {
      x.swap(x_new);
      r.swap(r_new);
      cost = r.squaredNorm();
      lambda = std::max(lambda / 10, kMinDamping);
    } else {
      lambda *= 10;
    }
  }

  Coordinates<double> coords = Eigen::Map<const Coordinates<double>>(x.data(), nv, 2);
  out.graph = g.with_vertices(std::move(coords), 1.0);
  out.iterations = it;
  out.final_residual = prob.edge_max(r);
  out.final_coincidence_gap = prob.gap_max(r);
  out.converged = done(r);
  return out;
}

}  // namespace matchstick
