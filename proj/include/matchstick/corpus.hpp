#pragma once

#include <string>
#include <vector>

#include "matchstick/ingest.hpp"

namespace matchstick {

/// Environment variable that overrides the built-in corpus directory.
inline constexpr const char* kCorpusEnvVar = "MATCHSTICK_CORPUS_DIR";

std::string corpus_dir();
/// Directory holding auxiliary data such as the coverage manifest.
std::string data_dir();

/// Names of all `*.seg` files in the corpus directory, sorted.
std::vector<std::string> corpus_names();

SegmentFile load_corpus_file(const std::string& name);
EmbeddedGraph load_corpus_graph(const std::string& name);

/// `source` is a path to a segment file, or else a corpus name.
SegmentFile load_segment_source(const std::string& source);

}  // namespace matchstick
