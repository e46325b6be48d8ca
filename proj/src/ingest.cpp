#include "matchstick/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace matchstick {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<double> parse_real(std::string_view tok) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<Index> parse_index(std::string_view tok) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return static_cast<Index>(value);
}

void check_metadata(int line, const std::string& key, const std::string& value) {
  if (key == "claimed_vertices") {
    auto n = parse_index(value);
    if (!n || *n <= 0) {
      throw ParseError(ErrorCode::MalformedLine, line, "claimed_vertices must be a positive integer");
    }
  } else if (key == "claimed_profile") {
    if (value != "4-regular" && value != "(2,4)-regular") {
      throw ParseError(ErrorCode::MalformedLine, line, "claimed_profile must be 4-regular or (2,4)-regular");
    }
  } else if (key == "claimed_rigidity") {
    if (value != "rigid" && value != "flexible" && value != "unknown") {
      throw ParseError(ErrorCode::MalformedLine, line, "claimed_rigidity must be rigid, flexible or unknown");
    }
  }
}

double segment_length(const SegmentRecord& s) { return std::hypot(s[2] - s[0], s[3] - s[1]); }

}  // namespace

std::string SegmentFile::name() const {
  auto it = metadata.find("name");
  return it == metadata.end() ? std::string{} : it->second;
}

std::optional<Index> SegmentFile::claimed_vertices() const {
  auto it = metadata.find("claimed_vertices");
  if (it == metadata.end()) return std::nullopt;
  return parse_index(it->second);
}

std::optional<std::string> SegmentFile::claimed_profile() const {
  auto it = metadata.find("claimed_profile");
  if (it == metadata.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> SegmentFile::claimed_rigidity() const {
  auto it = metadata.find("claimed_rigidity");
  if (it == metadata.end()) return std::nullopt;
  return it->second;
}

SegmentFile parse_segment_file(std::string_view text) {
  SegmentFile out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '!') {
      const auto body = trim(line.substr(1));
      const auto sp = body.find_first_of(" \t");
      if (sp == std::string_view::npos) {
        throw ParseError(ErrorCode::MalformedLine, line_no, "metadata line needs a key and a value");
      }
      std::string key(body.substr(0, sp));
      std::string value(trim(body.substr(sp)));
      check_metadata(line_no, key, value);
      out.metadata[key] = value;
      continue;
    }

    const auto tokens = split_ws(line);
    if (tokens.size() != 4) {
      throw ParseError(ErrorCode::MalformedLine, line_no,
                       "expected 4 coordinates, found " + std::to_string(tokens.size()));
    }
    SegmentRecord seg{};
    for (std::size_t k = 0; k < 4; ++k) {
      auto v = parse_real(tokens[k]);
      if (!v) {
        throw ParseError(ErrorCode::MalformedLine, line_no,
                         "not a finite decimal number: '" + std::string(tokens[k]) + "'");
      }
      seg[k] = *v;
    }
    out.segments.push_back(seg);
  }

  if (out.metadata.find("name") == out.metadata.end()) {
    throw Error(ErrorCode::MissingMetadata, "missing required metadata key 'name'");
  }
  if (out.segments.empty()) {
    throw Error(ErrorCode::MalformedLine, "segment file contains no segments");
  }
  return out;
}

SegmentFile read_segment_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::NotFound, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_segment_file(ss.str());
}

double estimate_unit(std::span<const SegmentRecord> segments) {
  if (segments.empty()) throw Error(ErrorCode::InvalidArgument, "no segments");
  std::vector<double> lengths;
  lengths.reserve(segments.size());
  for (const auto& s : segments) lengths.push_back(segment_length(s));
  std::sort(lengths.begin(), lengths.end());
  const std::size_t n = lengths.size();
  return n % 2 ? lengths[n / 2] : 0.5 * (lengths[n / 2 - 1] + lengths[n / 2]);
}

double max_unit_deviation(std::span<const SegmentRecord> segments, double unit) {
  double worst = 0;
  for (const auto& s : segments) worst = std::max(worst, std::abs(segment_length(s) / unit - 1.0));
  return worst;
}

EmbeddedGraph build_graph(const SegmentFile& file, const MergePolicy& policy) {
  const double unit = estimate_unit(file.segments);
  const double eps = policy.epsilon_merge;
  if (!(eps > 0) || !(eps < 0.1 * unit)) {
    throw Error(ErrorCode::InvalidArgument, "epsilon_merge must lie in (0, 0.1 * unit)");
  }

  // Greedy clustering in order of first appearance; an endpoint joins the
  // first cluster whose running centroid is within eps.
  struct Cluster {
    Eigen::Vector2d sum = Eigen::Vector2d::Zero();
    int count = 0;
    Eigen::Vector2d center() const { return sum / count; }
  };
  std::vector<Cluster> clusters;
  auto assign = [&](double x, double y) -> Index {
    const Eigen::Vector2d p(x, y);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if ((clusters[c].center() - p).norm() < eps) {
        clusters[c].sum += p;
        ++clusters[c].count;
        return static_cast<Index>(c);
      }
    }
    clusters.push_back({p, 1});
    return static_cast<Index>(clusters.size() - 1);
  };

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 0; i < file.segments.size(); ++i) {
    const auto& s = file.segments[i];
    const Index a = assign(s[0], s[1]);
    const Index b = assign(s[2], s[3]);
    if (a == b) {
      throw Error(ErrorCode::DegenerateSegment,
                  "segment " + std::to_string(i + 1) + " collapses to a single vertex");
    }
    const Edge e(a, b);
    if (seen.insert(e).second) edges.push_back(e);
  }

  Coordinates<double> coords(static_cast<Index>(clusters.size()), 2);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    coords.row(static_cast<Index>(c)) = clusters[c].center().transpose();
  }
  for (Index i = 0; i < coords.rows(); ++i) {
    for (Index j = i + 1; j < coords.rows(); ++j) {
      if ((coords.row(i) - coords.row(j)).norm() < 2 * eps) {
        throw Error(ErrorCode::AmbiguousMerge,
                    "vertex clusters " + std::to_string(i) + " and " + std::to_string(j) +
                        " are closer than 2 * epsilon_merge");
      }
    }
  }
  return EmbeddedGraph(std::move(coords), std::move(edges), unit, file.name());
}

std::string emit_segments(const EmbeddedGraph& g, const std::map<std::string, std::string>& metadata) {
  std::string out;
  char buf[128];
  out += "! name " + (g.name().empty() ? std::string("graph") : g.name()) + "\n";
  for (const auto& [k, v] : metadata) {
    if (k == "name") continue;
    out += "! " + k + " " + v + "\n";
  }
  for (const Edge& e : g.edges()) {
    const auto p = g.vertex(e.u);
    const auto q = g.vertex(e.v);
    std::snprintf(buf, sizeof buf, "%.9g %.9g %.9g %.9g\n", p.x(), p.y(), q.x(), q.y());
    out += buf;
  }
  return out;
}

}  // namespace matchstick
