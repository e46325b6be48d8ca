#include "matchstick/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

namespace matchstick {

namespace fs = std::filesystem;

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "invalid-graph";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::ProfileNotApplicable: return "profile-not-applicable";
    case ErrorCode::MalformedLine: return "malformed-line";
    case ErrorCode::MissingMetadata: return "missing-metadata";
    case ErrorCode::AmbiguousMerge: return "ambiguous-merge";
    case ErrorCode::DegenerateSegment: return "degenerate-segment";
    case ErrorCode::ZeroLengthEdge: return "zero-length-edge";
    case ErrorCode::DisconnectedGraph: return "disconnected-graph";
    case ErrorCode::WrongDegree: return "wrong-degree";
    case ErrorCode::VertexOnAxis: return "vertex-on-axis";
    case ErrorCode::InvalidPlan: return "invalid-plan";
    case ErrorCode::RealizationFailed: return "realization-failed";
    case ErrorCode::NotFound: return "not-found";
  }
  return "unknown";
}

std::string corpus_dir() {
  if (const char* env = std::getenv(kCorpusEnvVar); env && *env) return env;
  return MATCHSTICK_CORPUS_DIR;
}

std::string data_dir() { return MATCHSTICK_DATA_DIR; }

std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  const fs::path dir(corpus_dir());
  if (!fs::is_directory(dir)) throw Error(ErrorCode::NotFound, "corpus directory not found: " + dir.string());
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".seg") {
      names.push_back(entry.path().stem().string());
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

SegmentFile load_corpus_file(const std::string& name) {
  const fs::path path = fs::path(corpus_dir()) / (name + ".seg");
  if (!fs::exists(path)) throw Error(ErrorCode::NotFound, "no corpus graph named '" + name + "'");
  return read_segment_file(path.string());
}

EmbeddedGraph load_corpus_graph(const std::string& name) { return build_graph(load_corpus_file(name)); }

SegmentFile load_segment_source(const std::string& source) {
  if (fs::is_regular_file(source)) return read_segment_file(source);
  return load_corpus_file(source);
}

}  // namespace matchstick
