#include "matchstick/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace matchstick {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::FourRegular: return "4-regular matchstick";
    case Classification::TwoFourRegular: return "(2,4)-regular matchstick";
    case Classification::OtherMatchstick: return "matchstick";
    case Classification::NotMatchstick: return "not-a-matchstick-graph";
  }
  return "unknown";
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  switch (classification) {
    case Classification::FourRegular:
      os << "4-regular matchstick, " << vertex_count << " vertices";
      break;
    case Classification::TwoFourRegular:
      os << "(2,4)-regular matchstick with " << degree_two_count << " degree-2 vertices, "
         << vertex_count << " vertices";
      break;
    case Classification::OtherMatchstick:
      os << "matchstick, " << vertex_count << " vertices";
      break;
    case Classification::NotMatchstick:
      os << "not-a-matchstick-graph";
      break;
  }
  return os.str();
}

namespace {

struct Box {
  double x0, y0, x1, y1;
  /// Lower bound on the distance between anything inside the two boxes.
  double gap(const Box& o) const {
    const double dx = std::max({0.0, x0 - o.x1, o.x0 - x1});
    const double dy = std::max({0.0, y0 - o.y1, o.y0 - y1});
    return std::hypot(dx, dy);
  }
};

}  // namespace

VerificationReport verify_matchstick(const EmbeddedGraph& input, const Tolerances& tol) {
  if (!(tol.eps_length > 0 && tol.eps_length < 0.1) ||
      !(tol.eps_separation > 0 && tol.eps_separation < 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances out of range");
  }
  const EmbeddedGraph g = normalize(input);
  const auto& edges = g.edges();
  const Index ne = g.edge_count();
  const Index nv = g.vertex_count();
  const double eps = tol.eps_separation;

  VerificationReport r;
  r.vertex_count = nv;
  r.edge_count = ne;
  r.profile = degree_profile(g);

  for (Index i = 0; i < ne; ++i) {
    const double dev = std::abs(edge_length(g, i) - 1.0);
    if (dev > r.worst_deviation || r.worst_edge < 0) {
      r.worst_deviation = dev;
      r.worst_edge = i;
    }
  }
  r.unit_length_ok = r.worst_deviation <= tol.eps_length;

  std::vector<Segment<double>> segs;
  std::vector<Box> boxes;
  segs.reserve(edges.size());
  boxes.reserve(edges.size());
  for (const Edge& e : edges) {
    const auto p = g.vertex(e.u);
    const auto q = g.vertex(e.v);
    segs.push_back({p, q});
    boxes.push_back({std::min(p.x(), q.x()), std::min(p.y(), q.y()), std::max(p.x(), q.x()),
                     std::max(p.y(), q.y())});
  }

  r.min_edge_clearance = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < ne; ++i) {
    const Edge& ei = edges[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < ne; ++j) {
      const Edge& ej = edges[static_cast<std::size_t>(j)];
      std::optional<SharedEnd> shared;
      if (ei.u == ej.u) shared = SharedEnd{0, 0};
      else if (ei.u == ej.v) shared = SharedEnd{0, 1};
      else if (ei.v == ej.u) shared = SharedEnd{1, 0};
      else if (ei.v == ej.v) shared = SharedEnd{1, 1};

      // The box gap bounds the segment distance from below, so the skip
      // loses neither a conflict nor the exact minimum clearance.
      if (!shared) {
        const double gap = boxes[static_cast<std::size_t>(i)].gap(boxes[static_cast<std::size_t>(j)]);
        if (gap >= eps && gap >= r.min_edge_clearance) continue;
      }
      const auto res = segments_conflict(segs[static_cast<std::size_t>(i)],
                                         segs[static_cast<std::size_t>(j)], shared, eps);
      if (!shared) r.min_edge_clearance = std::min(r.min_edge_clearance, res.distance);
      if (res.conflict) r.crossings.push_back({i, j, res.distance});
    }
  }
  r.crossing_ok = r.crossings.empty();

  for (Index a = 0; a < nv; ++a) {
    for (Index b = a + 1; b < nv; ++b) {
      const double d = (g.vertex(a) - g.vertex(b)).norm();
      if (d < eps) r.clearance_violations.push_back({VertexViolation::Kind::VertexVertex, a, b, d});
    }
  }
  for (Index a = 0; a < nv; ++a) {
    const auto p = g.vertex(a);
    for (Index i = 0; i < ne; ++i) {
      if (edges[static_cast<std::size_t>(i)].has(a)) continue;
      const Box& bx = boxes[static_cast<std::size_t>(i)];
      if (p.x() < bx.x0 - eps || p.x() > bx.x1 + eps || p.y() < bx.y0 - eps || p.y() > bx.y1 + eps) {
        continue;
      }
      const double d = point_segment_distance(Point2<double>(p), segs[static_cast<std::size_t>(i)]);
      if (d < eps) r.clearance_violations.push_back({VertexViolation::Kind::VertexEdge, a, i, d});
    }
  }
  r.vertex_clearance_ok = r.clearance_violations.empty();

  r.degree_two_count = r.profile.count(2);
  if (!(r.unit_length_ok && r.crossing_ok && r.vertex_clearance_ok)) {
    r.classification = Classification::NotMatchstick;
  } else if (r.profile.is_four_regular()) {
    r.classification = Classification::FourRegular;
  } else if (r.profile.is_two_four_regular()) {
    r.classification = Classification::TwoFourRegular;
  } else {
    r.classification = Classification::OtherMatchstick;
  }
  return r;
}

}  // namespace matchstick
