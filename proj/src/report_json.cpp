#include <cmath>

#include "matchstick/corpus.hpp"
#include "matchstick/error.hpp"
#include "matchstick/ingest.hpp"
#include "matchstick/json_io.hpp"

namespace matchstick {

namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json to_json(const DegreeProfile& p) {
  Json out = Json::object();
  for (const auto& [d, n] : p.counts) out[std::to_string(d)] = n;
  return out;
}

Json to_json(const VerificationReport& r) {
  Json crossings = Json::array();
  for (const auto& c : r.crossings) crossings.push_back({{"edges", {c.edge_a, c.edge_b}}, {"distance", number(c.distance)}});
  Json clearance = Json::array();
  for (const auto& c : r.clearance_violations) {
    const bool vv = c.kind == VertexViolation::Kind::VertexVertex;
    clearance.push_back({{"kind", vv ? "vertex-vertex" : "vertex-edge"},
                         {vv ? "vertices" : "vertex_edge", {c.vertex, c.other}},
                         {"distance", number(c.distance)}});
  }
  return Json{
      {"vertex_count", r.vertex_count},
      {"edge_count", r.edge_count},
      {"unit_length_ok", r.unit_length_ok},
      {"worst_edge", r.worst_edge},
      {"worst_deviation", number(r.worst_deviation)},
      {"crossing_ok", r.crossing_ok},
      {"crossings", crossings},
      {"vertex_clearance_ok", r.vertex_clearance_ok},
      {"clearance_violations", clearance},
      {"degree_profile", to_json(r.profile)},
      {"classification", to_string(r.classification)},
      {"degree_two_count", r.degree_two_count},
      {"min_edge_clearance", number(r.min_edge_clearance)},
      {"summary", r.summary()},
  };
}

Json to_json(const RigidityReport& r, std::size_t tail) {
  Json t = Json::array();
  for (double s : r.singular_tail(tail)) t.push_back(number(s));
  return Json{
      {"rank", r.rank},
      {"dof_bound", r.dof_bound},
      {"internal_flexes", r.internal_flexes},
      {"classification", to_string(r.classification)},
      {"rank_threshold", number(r.rank_threshold)},
      {"singular_tail", t},
  };
}

Json to_json(const CoverageTable& t) {
  Json rows = Json::array();
  for (const auto& [v, g] : t.rows) rows.push_back({{"v", v}, {"g", g}});
  return Json{{"parts", t.parts}, {"rows", rows}, {"total", t.total()}};
}

Json to_json(const CoverageCertificate& c) {
  Json witnesses = Json::array();
  for (const auto& [v, w] : c.witnesses) witnesses.push_back({{"v", v}, {"kind", to_string(w.kind)}, {"detail", w.detail}});
  return Json{
      {"range", {c.range_start, c.range_end}},
      {"missing", Json(std::vector<Index>(c.missing.begin(), c.missing.end()))},
      {"witnesses", witnesses},
  };
}

CompositionPlan plan_from_json(const Json& j) {
  CompositionPlan plan;
  try {
    plan.name = j.value("name", std::string("composition"));
    for (const auto& p : j.at("parts")) {
      const std::string source = p.at("source").get<std::string>();
      plan.parts.push_back({source, build_graph(load_segment_source(source)), p.value("reflect", false)});
    }
    for (const auto& id : j.at("identifications")) {
      plan.identifications.push_back({id.at("part_a").get<Index>(), id.at("slot_a").get<Index>(),
                                      id.at("part_b").get<Index>(), id.at("slot_b").get<Index>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidPlan, std::string("bad plan: ") + e.what());
  }
  return plan;
}

Json plan_to_json(const CompositionPlan& plan) {
  Json parts = Json::array();
  for (const auto& p : plan.parts) parts.push_back({{"source", p.label}, {"reflect", p.reflect}});
  Json ids = Json::array();
  for (const auto& id : plan.identifications) {
    ids.push_back({{"part_a", id.part_a}, {"slot_a", id.slot_a}, {"part_b", id.part_b}, {"slot_b", id.slot_b}});
  }
  return Json{{"name", plan.name}, {"parts", parts}, {"identifications", ids}};
}

}  // namespace matchstick
