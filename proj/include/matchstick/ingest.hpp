#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matchstick/model.hpp"

namespace matchstick {

/// One drawn line: (x1, y1, x2, y2) in drawing units.
using SegmentRecord = std::array<double, 4>;

/// Parsed segment file: metadata lines plus data lines in file order.
///
/// Text format, one record per line:
///   # comment
///   ! key value          (name, claimed_vertices, claimed_profile, claimed_rigidity)
///   x1 y1 x2 y2
struct SegmentFile {
  std::map<std::string, std::string> metadata;
  std::vector<SegmentRecord> segments;

  std::string name() const;
  std::optional<Index> claimed_vertices() const;
  std::optional<std::string> claimed_profile() const;
  std::optional<std::string> claimed_rigidity() const;
};

struct MergePolicy {
  /// Endpoints closer than this (drawing units) are the same vertex.
  double epsilon_merge = 1e-2;
};

SegmentFile parse_segment_file(std::string_view text);
SegmentFile read_segment_file(const std::string& path);

/// Median segment length; the mean of the middle pair for even counts.
double estimate_unit(std::span<const SegmentRecord> segments);

/// max |length / unit - 1| over all segments.
double max_unit_deviation(std::span<const SegmentRecord> segments, double unit);

/// Cluster endpoints into vertices (centroid of each cluster), collapse
/// duplicate edges, and set the unit from estimate_unit.
EmbeddedGraph build_graph(const SegmentFile& file, const MergePolicy& policy = {});

/// Inverse of build_graph: one data line per edge, 9 significant digits.
/// `metadata` entries other than name are written after the name line.
std::string emit_segments(const EmbeddedGraph& g,
                          const std::map<std::string, std::string>& metadata = {});

}  // namespace matchstick
