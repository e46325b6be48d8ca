#pragma once

#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "matchstick/model.hpp"

namespace matchstick {

/// Vertex counts of the available two-join parts, ascending.
class Inventory {
 public:
  Inventory() = default;
  explicit Inventory(std::vector<Index> sizes);

  const std::vector<Index>& part_sizes() const { return sizes_; }
  Index size() const { return static_cast<Index>(sizes_.size()); }

 private:
  std::vector<Index> sizes_;
};

/// Number of multisets of size k from n kinds: C(n + k - 1, k).
Index multiset_count(Index n, Index k);

/// Visit every multiset of size k drawn from `items` with repetition, as a
/// non-decreasing index sequence into `items`, in lexicographic order.
void for_each_multiset(Index n, Index k, const std::function<void(std::span<const Index>)>& visit);

/// Vertex count v -> number g of multisets whose cycle composition has v
/// vertices (sum of sizes minus k). Rows cover the whole attainable range,
/// zeros included.
struct CoverageTable {
  Index parts = 0;
  std::map<Index, Index> rows;
  /// First multiset (lexicographic) reaching each nonzero row.
  std::map<Index, std::vector<Index>> first_combination;

  Index total() const;
  Index count(Index v) const;
  std::map<Index, Index> nonzero_rows() const;
};

CoverageTable combinations_table(const Inventory& inv, Index k);

/// Aligned text: columns of `rows_per_column` "v g" pairs, filled top to
/// bottom then left to right.
std::string format_table(const CoverageTable& table, int rows_per_column = 8);

struct ArithmeticFamily {
  Index offset = 0;
  Index stride = 1;
  std::string source;

  bool contains(Index v) const { return v >= offset && (v - offset) % stride == 0; }
};

struct ManifestEntry {
  Index vertices = 0;
  std::string source;
};

/// Declarative list of everything the coverage checker may use.
struct CoverageManifest {
  Index range_start = 63;
  Inventory inventory;
  std::vector<std::string> inventory_sources;
  Index parts = 3;
  std::vector<ManifestEntry> mirror_doubles;
  std::vector<ManifestEntry> corpus_graphs;
  std::vector<ManifestEntry> rings;
  std::vector<ArithmeticFamily> families;
  std::vector<ManifestEntry> small_examples;
};

CoverageManifest parse_manifest(const std::string& json_text);
/// The manifest shipped with the library (data/coverage_manifest.json).
const CoverageManifest& default_manifest();

struct Witness {
  enum class Kind { Combination, MirrorDouble, Corpus, Ring, Family };
  Kind kind = Kind::Combination;
  std::string detail;
};

std::string to_string(Witness::Kind k);

struct CoverageCertificate {
  Index range_start = 63;
  Index range_end = 63;
  std::set<Index> missing;
  std::map<Index, Witness> witnesses;

  bool complete() const { return missing.empty(); }
};

/// Every vertex count in [range_start, max_check] not covered by the
/// manifest's sources, plus one witness per covered count. Sources are tried
/// in order: combinations, mirror doubles, corpus graphs, rings, families.
CoverageCertificate theorem1_coverage(const CoverageManifest& manifest, Index max_check);
CoverageCertificate theorem1_coverage(Index max_check);

/// Vertex counts below the coverage range with a known example.
std::set<Index> below_63_catalog(const CoverageManifest& manifest = default_manifest());

}  // namespace matchstick
