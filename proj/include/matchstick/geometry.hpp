#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "matchstick/model.hpp"

namespace matchstick {

template <typename Scalar>
struct Segment {
  Point2<Scalar> p;
  Point2<Scalar> q;
};

/// Which endpoint (0 = p, 1 = q) of each segment is the shared vertex.
struct SharedEnd {
  int in_a = 0;
  int in_b = 0;
};

template <typename Scalar>
Scalar cross2(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Twice the signed area of (a, b, c); positive for a left turn.
template <typename Scalar>
Scalar orientation(const Point2<Scalar>& a, const Point2<Scalar>& b, const Point2<Scalar>& c) {
  return cross2<Scalar>(b - a, c - a);
}

template <typename Scalar>
Scalar point_segment_distance(const Point2<Scalar>& x, const Segment<Scalar>& s) {
  const Point2<Scalar> d = s.q - s.p;
  const Scalar len2 = d.squaredNorm();
  if (len2 == Scalar(0)) return (x - s.p).norm();
  const Scalar t = std::clamp<Scalar>((x - s.p).dot(d) / len2, Scalar(0), Scalar(1));
  return (x - (s.p + t * d)).norm();
}

/// True when the closed segments cross at a single interior point of both.
template <typename Scalar>
bool segments_cross_properly(const Segment<Scalar>& a, const Segment<Scalar>& b) {
  const Scalar o1 = orientation(a.p, a.q, b.p);
  const Scalar o2 = orientation(a.p, a.q, b.q);
  const Scalar o3 = orientation(b.p, b.q, a.p);
  const Scalar o4 = orientation(b.p, b.q, a.q);
  return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

/// Minimum Euclidean distance between two closed segments (0 if they meet).
template <typename Scalar>
Scalar segment_distance(const Segment<Scalar>& a, const Segment<Scalar>& b) {
  if (segments_cross_properly(a, b)) return Scalar(0);
  return std::min({point_segment_distance(a.p, b), point_segment_distance(a.q, b),
                   point_segment_distance(b.p, a), point_segment_distance(b.q, a)});
}

template <typename Scalar>
struct ConflictResult {
  bool conflict = false;
  /// Non-adjacent: minimum distance. Adjacent: smallest distance from a free
  /// endpoint to the other segment.
  Scalar distance = Scalar(0);
};

/// Clearance test between two edges.
///
/// Non-adjacent pairs conflict when they intersect or come closer than eps.
/// Adjacent pairs conflict when the free endpoint of either lies within eps
/// of the other segment, i.e. they overlap beyond the shared vertex; for unit
/// edges that is an angle below asin(eps).
template <typename Scalar>
ConflictResult<Scalar> segments_conflict(const Segment<Scalar>& a, const Segment<Scalar>& b,
                                         std::optional<SharedEnd> shared, Scalar eps) {
  if (!shared) {
    const Scalar d = segment_distance(a, b);
    return {d < eps, d};
  }
  const Point2<Scalar>& free_a = shared->in_a == 0 ? a.q : a.p;
  const Point2<Scalar>& free_b = shared->in_b == 0 ? b.q : b.p;
  const Scalar d = std::min(point_segment_distance(free_a, b), point_segment_distance(free_b, a));
  return {d < eps, d};
}

}  // namespace matchstick
