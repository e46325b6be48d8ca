#include "matchstick/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include <json.hpp>

#include "manifest_data.hpp"
#include "matchstick/error.hpp"

namespace matchstick {

Inventory::Inventory(std::vector<Index> sizes) : sizes_(std::move(sizes)) {
  for (Index s : sizes_) {
    if (s < 3) throw Error(ErrorCode::InvalidArgument, "inventory part sizes must be at least 3");
  }
  std::sort(sizes_.begin(), sizes_.end());
}

Index multiset_count(Index n, Index k) {
  if (n < 0 || k < 0) throw Error(ErrorCode::InvalidArgument, "multiset_count needs n, k >= 0");
  if (k == 0) return 1;
  if (n == 0) return 0;
  // C(n + k - 1, k), built up so every intermediate value is an exact binomial.
  Index r = 1;
  for (Index i = 1; i <= k; ++i) r = r * (n - 1 + i) / i;
  return r;
}

void for_each_multiset(Index n, Index k, const std::function<void(std::span<const Index>)>& visit) {
  if (k < 0 || n < 0) throw Error(ErrorCode::InvalidArgument, "for_each_multiset needs n, k >= 0");
  if (k == 0) {
    visit({});
    return;
  }
  if (n == 0) return;
  std::vector<Index> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    visit(idx);
    // Odometer step keeping the sequence non-decreasing.
    Index pos = k - 1;
    while (pos >= 0 && idx[pos] == n - 1) --pos;
    if (pos < 0) break;
    const Index next = idx[pos] + 1;
    for (Index j = pos; j < k; ++j) idx[j] = next;
  }
}

Index CoverageTable::total() const {
  Index t = 0;
  for (const auto& [v, g] : rows) t += g;
  return t;
}

Index CoverageTable::count(Index v) const {
  auto it = rows.find(v);
  return it == rows.end() ? 0 : it->second;
}

std::map<Index, Index> CoverageTable::nonzero_rows() const {
  std::map<Index, Index> out;
  for (const auto& [v, g] : rows) {
    if (g > 0) out.emplace(v, g);
  }
  return out;
}

CoverageTable combinations_table(const Inventory& inv, Index k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "combinations_table needs k >= 1");
  CoverageTable table;
  table.parts = k;
  const auto& sizes = inv.part_sizes();
  if (sizes.empty()) return table;

  const Index lo = k * sizes.front() - k;
  const Index hi = k * sizes.back() - k;
  for (Index v = lo; v <= hi; ++v) table.rows.emplace(v, 0);

  for_each_multiset(inv.size(), k, [&](std::span<const Index> idx) {
    Index v = -k;
    for (Index i : idx) v += sizes[i];
    ++table.rows[v];
    if (!table.first_combination.count(v)) {
      std::vector<Index> combo;
      for (Index i : idx) combo.push_back(sizes[i]);
      table.first_combination.emplace(v, std::move(combo));
    }
  });
  return table;
}

std::string format_table(const CoverageTable& table, int rows_per_column) {
  if (rows_per_column < 1) throw Error(ErrorCode::InvalidArgument, "rows_per_column must be positive");
  std::vector<std::pair<Index, Index>> cells(table.rows.begin(), table.rows.end());
  const std::size_t per = static_cast<std::size_t>(rows_per_column);
  const std::size_t columns = (cells.size() + per - 1) / per;

  std::string out;
  char buf[64];
  for (std::size_t r = 0; r < per && r < cells.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < columns; ++c) {
      const std::size_t i = c * per + r;
      if (i >= cells.size()) break;
      std::snprintf(buf, sizeof buf, "%s%4lld %2lld", c ? " |" : "|", static_cast<long long>(cells[i].first),
                    static_cast<long long>(cells[i].second));
      line += buf;
    }
    out += line + " |\n";
  }
  std::snprintf(buf, sizeof buf, "total: %lld\n", static_cast<long long>(table.total()));
  out += buf;
  return out;
}

namespace {

std::vector<ManifestEntry> read_entries(const nlohmann::json& j, const char* key) {
  std::vector<ManifestEntry> out;
  if (!j.contains(key)) return out;
  for (const auto& e : j.at(key)) out.push_back({e.at("vertices").get<Index>(), e.value("source", std::string{})});
  return out;
}

std::string join_sizes(const std::vector<Index>& combo) {
  std::string s;
  for (std::size_t i = 0; i < combo.size(); ++i) {
    if (i) s += "+";
    s += std::to_string(combo[i]);
  }
  return s;
}

}  // namespace

CoverageManifest parse_manifest(const std::string& json_text) {
  CoverageManifest m;
  try {
    const auto j = nlohmann::json::parse(json_text);
    m.range_start = j.value("range_start", Index{63});
    const auto& comb = j.at("combinations");
    auto sizes = comb.at("inventory").get<std::vector<Index>>();
    auto sources = comb.value("inventory_sources", std::vector<std::string>{});
    if (!sources.empty() && sources.size() != sizes.size()) {
      throw Error(ErrorCode::InvalidArgument, "inventory_sources must match inventory in length");
    }
    // Keep sources aligned with the sorted sizes.
    std::vector<std::size_t> order(sizes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
    for (std::size_t i : order) {
      if (!sources.empty()) m.inventory_sources.push_back(sources[i]);
    }
    m.inventory = Inventory(std::move(sizes));
    m.parts = comb.value("parts", Index{3});
    m.mirror_doubles = read_entries(j, "mirror_doubles");
    m.corpus_graphs = read_entries(j, "corpus_graphs");
    m.rings = read_entries(j, "rings");
    for (const auto& f : j.value("families", nlohmann::json::array())) {
      ArithmeticFamily fam{f.at("offset").get<Index>(), f.at("stride").get<Index>(), f.value("source", std::string{})};
      if (fam.stride < 1) throw Error(ErrorCode::InvalidArgument, "family stride must be at least 1");
      m.families.push_back(std::move(fam));
    }
    m.small_examples = read_entries(j, "small_examples");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad coverage manifest: ") + e.what());
  }
  return m;
}

const CoverageManifest& default_manifest() {
  static const CoverageManifest m = parse_manifest(detail::kEmbeddedManifest);
  return m;
}

std::string to_string(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::Combination: return "combination";
    case Witness::Kind::MirrorDouble: return "mirror";
    case Witness::Kind::Corpus: return "corpus";
    case Witness::Kind::Ring: return "ring";
    case Witness::Kind::Family: return "family";
  }
  return "unknown";
}

CoverageCertificate theorem1_coverage(const CoverageManifest& manifest, Index max_check) {
  if (max_check < manifest.range_start) {
    throw Error(ErrorCode::InvalidArgument, "max_check must be at least " + std::to_string(manifest.range_start));
  }
  CoverageCertificate cert;
  cert.range_start = manifest.range_start;
  cert.range_end = max_check;

  const CoverageTable table = combinations_table(manifest.inventory, manifest.parts);
  auto offer = [&](Index v, Witness::Kind kind, const std::string& detail) {
    if (v < cert.range_start || v > max_check) return;
    cert.witnesses.try_emplace(v, Witness{kind, detail});
  };

  auto source_of = [&](Index size) -> std::string {
    const auto& sizes = manifest.inventory.part_sizes();
    const auto it = std::find(sizes.begin(), sizes.end(), size);
    const auto i = static_cast<std::size_t>(it - sizes.begin());
    return i < manifest.inventory_sources.size() ? manifest.inventory_sources[i] : std::to_string(size);
  };
  for (const auto& [v, combo] : table.first_combination) {
    std::string names;
    for (Index s : combo) names += (names.empty() ? "" : "+") + source_of(s);
    offer(v, Witness::Kind::Combination, "ring of " + names + " (" + join_sizes(combo) + ")");
  }
  for (const auto& e : manifest.mirror_doubles) offer(e.vertices, Witness::Kind::MirrorDouble, e.source);
  for (const auto& e : manifest.corpus_graphs) offer(e.vertices, Witness::Kind::Corpus, e.source);
  for (const auto& e : manifest.rings) offer(e.vertices, Witness::Kind::Ring, e.source);
  for (const auto& f : manifest.families) {
    for (Index v = std::max(f.offset, cert.range_start); v <= max_check; ++v) {
      if (!f.contains(v) || cert.witnesses.count(v)) continue;
      const Index n = (v - f.offset) / f.stride;
      offer(v, Witness::Kind::Family, f.source + ", n = " + std::to_string(n));
    }
  }

  for (Index v = cert.range_start; v <= max_check; ++v) {
    if (!cert.witnesses.count(v)) cert.missing.insert(v);
  }
  return cert;
}

CoverageCertificate theorem1_coverage(Index max_check) { return theorem1_coverage(default_manifest(), max_check); }

std::set<Index> below_63_catalog(const CoverageManifest& manifest) {
  std::set<Index> out;
  for (const auto& e : manifest.small_examples) {
    if (e.vertices < manifest.range_start) out.insert(e.vertices);
  }
  return out;
}

}  // namespace matchstick
