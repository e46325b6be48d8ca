#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matchstick/construct.hpp"
#include "matchstick/corpus.hpp"
#include "matchstick/enumerate.hpp"
#include "matchstick/error.hpp"
#include "matchstick/ingest.hpp"
#include "matchstick/json_io.hpp"
#include "matchstick/refine.hpp"
#include "matchstick/rigidity.hpp"
#include "matchstick/verify.hpp"

using namespace matchstick;

namespace {

enum Exit { kOk = 0, kDomain = 1, kUsage = 2, kNumerical = 3 };

std::string fmt(double x) {
  if (!std::isfinite(x)) return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string profile_text(const DegreeProfile& p) {
  std::string s;
  for (const auto& [d, n] : p.counts) {
    if (!s.empty()) s += ", ";
    s += "deg " + std::to_string(d) + ": " + std::to_string(n);
  }
  return s.empty() ? "empty" : s;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::NotFound, "cannot write " + path);
  out << text;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Prepared {
  EmbeddedGraph graph;
  SegmentFile file;
  std::optional<RefineResult> refined;
};

/// Ingest `source` and, unless raw, refine it. Throws RealizationFailed if
/// refinement does not reach the target.
Prepared prepare(const std::string& source, bool raw, const RefineOptions& opts = {}) {
  SegmentFile file = load_segment_source(source);
  EmbeddedGraph g = build_graph(file);
  if (raw) return {g, std::move(file), std::nullopt};
  RefineResult r = refine(g, opts);
  if (!r.converged) {
    throw Error(ErrorCode::RealizationFailed,
                "refinement did not converge (residual " + fmt(r.final_residual) + ")");
  }
  EmbeddedGraph refined = r.graph;
  return {refined, std::move(file), std::move(r)};
}

void print_report(const VerificationReport& rep) {
  std::cout << "vertices: " << rep.vertex_count << "\n"
            << "edges: " << rep.edge_count << "\n"
            << "degree profile: " << profile_text(rep.profile) << "\n"
            << "unit lengths: " << (rep.unit_length_ok ? "ok" : "FAIL") << " (worst deviation "
            << fmt(rep.worst_deviation) << " at edge " << rep.worst_edge << ")\n"
            << "crossings: " << rep.crossings.size() << "\n"
            << "clearance violations: " << rep.clearance_violations.size() << "\n"
            << "min edge clearance: " << fmt(rep.min_edge_clearance) << "\n";
  for (const auto& c : rep.crossings) {
    std::cout << "  crossing: edges " << c.edge_a << " " << c.edge_b << " distance " << fmt(c.distance) << "\n";
  }
  for (const auto& c : rep.clearance_violations) {
    std::cout << "  clearance: " << (c.kind == VertexViolation::Kind::VertexVertex ? "vertices " : "vertex/edge ")
              << c.vertex << " " << c.other << " distance " << fmt(c.distance) << "\n";
  }
  std::cout << "classification: " << rep.summary() << "\n";
}

/// Verify a freshly constructed graph, write it, and report.
int finish_construction(const EmbeddedGraph& g, const std::string& out, bool json) {
  const VerificationReport rep = verify_matchstick(g);
  write_file(out, emit_segments(g));
  if (json) {
    Json j = to_json(rep);
    j["output"] = out;
    print_json(j);
  } else {
    std::cout << "wrote: " << out << "\n";
    print_report(rep);
  }
  return rep.is_matchstick() ? kOk : kDomain;
}

PartSpec part_from_source(const std::string& source) {
  return {source, build_graph(load_segment_source(source)), false};
}

std::vector<Index> parse_sizes(const std::string& text) {
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "bad inventory entry '" + tok + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty inventory");
  return out;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::MalformedLine:
    case ErrorCode::MissingMetadata:
    case ErrorCode::NotFound:
    case ErrorCode::InvalidPlan:
      return kUsage;
    case ErrorCode::RealizationFailed:
    case ErrorCode::ZeroLengthEdge:
      return kNumerical;
    default:
      return kDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matchstick graph toolkit: verify, refine, analyze, construct and enumerate."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check unit lengths, planarity and degree profile");
  std::string verify_src;
  bool verify_raw = false, verify_json = false;
  Tolerances verify_tol;
  std::optional<double> eps_length;
  verify_cmd->add_option("source", verify_src, "Segment file or corpus name")->required();
  verify_cmd->add_flag("--raw", verify_raw, "Skip refinement and use the loose raw tolerances");
  verify_cmd->add_option("--eps-length", eps_length, "Unit-length tolerance")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--eps-separation", verify_tol.eps_separation, "Clearance tolerance")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_json);

  // refine
  auto* refine_cmd = app.add_subcommand("refine", "Polish coordinates to exact unit edges");
  std::string refine_src, refine_out;
  RefineOptions refine_opts;
  std::vector<Index> refine_pins;
  refine_cmd->add_option("source", refine_src)->required();
  refine_cmd->add_option("-o,--output", refine_out, "Output segment file")->required();
  refine_cmd->add_option("--max-iterations", refine_opts.max_iterations)->check(CLI::PositiveNumber);
  refine_cmd->add_option("--target-residual", refine_opts.target_residual)->check(CLI::PositiveNumber);
  refine_cmd->add_option("--pin", refine_pins, "Vertices to hold fixed (both coordinates)");

  // rigidity
  auto* rig_cmd = app.add_subcommand("rigidity", "Infinitesimal rigidity from the rigidity matrix");
  std::string rig_src;
  double rank_tol = 1e-8;
  bool rig_json = false, rig_raw = false;
  rig_cmd->add_option("source", rig_src)->required();
  rig_cmd->add_option("--rank-tol", rank_tol, "Relative singular value cutoff")->check(CLI::PositiveNumber);
  rig_cmd->add_flag("--raw", rig_raw, "Analyze the drawn coordinates without refinement");
  rig_cmd->add_flag("--json", rig_json);

  // construct
  auto* con_cmd = app.add_subcommand("construct", "Build a 4-regular graph from parts");
  con_cmd->require_subcommand(1);
  std::string con_out;
  bool con_json = false;
  con_cmd->add_option("-o,--output", con_out, "Output segment file")->required();
  con_cmd->add_flag("--json", con_json);

  auto* mirror_cmd = con_cmd->add_subcommand("mirror", "Glue a part to its mirror image");
  std::string mirror_src, mirror_mode = "line";
  mirror_cmd->add_option("source", mirror_src)->required();
  mirror_cmd->add_option("--mode", mirror_mode, "line or point")->check(CLI::IsMember({"line", "point"}));

  auto* ring_cmd = con_cmd->add_subcommand("ring", "Cyclic composition of two-join parts");
  std::vector<std::string> ring_srcs;
  ring_cmd->add_option("sources", ring_srcs)->required()->expected(2, -1);

  auto* chain_cmd = con_cmd->add_subcommand("chain", "End parts joined through spacers");
  std::string chain_left, chain_right, chain_spacer;
  Index chain_count = 0;
  chain_cmd->add_option("--left", chain_left)->required();
  chain_cmd->add_option("--right", chain_right)->required();
  chain_cmd->add_option("--spacer", chain_spacer)->required();
  chain_cmd->add_option("-n,--count", chain_count, "Number of spacers")->check(CLI::NonNegativeNumber);

  auto* plan_cmd = con_cmd->add_subcommand("plan", "Composition described by a JSON plan");
  std::string plan_path;
  plan_cmd->add_option("plan", plan_path)->required()->check(CLI::ExistingFile);

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "Count cycle compositions by vertex count");
  std::string enum_inventory;
  Index enum_parts = 3;
  bool enum_json = false;
  enum_cmd->add_option("--inventory", enum_inventory, "Comma-separated part sizes")->required();
  enum_cmd->add_option("--parts", enum_parts)->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--json", enum_json);

  // coverage
  auto* cov_cmd = app.add_subcommand("coverage", "Vertex counts from 63 up without a construction");
  Index cov_max = 120;
  bool cov_json = false, cov_witnesses = false;
  std::vector<Index> cov_drop;
  std::string cov_manifest;
  cov_cmd->add_option("--max", cov_max)->required();
  cov_cmd->add_option("--drop-family", cov_drop, "Remove the family with this offset");
  cov_cmd->add_option("--manifest", cov_manifest, "Alternative manifest JSON")->check(CLI::ExistingFile);
  cov_cmd->add_flag("--witnesses", cov_witnesses, "List a witness per vertex count");
  cov_cmd->add_flag("--json", cov_json);

  // catalog
  auto* cat_cmd = app.add_subcommand("catalog", "List corpus graphs and check each one");
  bool cat_json = false;
  cat_cmd->add_flag("--json", cat_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*verify_cmd) {
      if (verify_raw) verify_tol.eps_length = Tolerances::raw().eps_length;
      if (eps_length) verify_tol.eps_length = *eps_length;
      const Prepared p = prepare(verify_src, verify_raw);
      const VerificationReport rep = verify_matchstick(p.graph, verify_tol);
      if (verify_json) {
        Json j{{"source", p.file.name()}, {"refined", p.refined.has_value()}};
        if (p.refined) j["refine_residual"] = p.refined->final_residual;
        j["report"] = to_json(rep);
        print_json(j);
      } else {
        std::cout << "source: " << p.file.name() << "\n";
        if (p.refined) {
          std::cout << "refined: " << p.refined->iterations << " iterations, residual "
                    << fmt(p.refined->initial_residual) << " -> " << fmt(p.refined->final_residual) << "\n";
        } else {
          std::cout << "refined: no (raw coordinates)\n";
        }
        print_report(rep);
      }
      return rep.is_matchstick() ? kOk : kDomain;
    }

    if (*refine_cmd) {
      if (!refine_pins.empty()) {
        std::vector<PinnedCoordinate> pins;
        for (Index v : refine_pins) {
          pins.push_back({v, Axis::X});
          pins.push_back({v, Axis::Y});
        }
        refine_opts.pinned = pins;
      }
      SegmentFile file = load_segment_source(refine_src);
      const RefineResult r = refine(build_graph(file), refine_opts);
      write_file(refine_out, emit_segments(r.graph, file.metadata));
      std::cout << "source: " << file.name() << "\n"
                << "iterations: " << r.iterations << "\n"
                << "initial residual: " << fmt(r.initial_residual) << "\n"
                << "final residual: " << fmt(r.final_residual) << "\n"
                << "converged: " << (r.converged ? "yes" : "no") << "\n"
                << "wrote: " << refine_out << "\n";
      return r.converged ? kOk : kNumerical;
    }

    if (*rig_cmd) {
      const Prepared p = prepare(rig_src, rig_raw);
      const RigidityReport rep = analyze_rigidity(p.graph, rank_tol);
      const auto claim = p.file.claimed_rigidity();
      if (rig_json) {
        Json j{{"source", p.file.name()}, {"refined", p.refined.has_value()}, {"report", to_json(rep)}};
        j["claimed"] = claim ? Json(*claim) : Json(nullptr);
        print_json(j);
      } else {
        std::cout << "source: " << p.file.name() << "\n"
                  << "vertices: " << p.graph.vertex_count() << "\n"
                  << "edges: " << p.graph.edge_count() << "\n"
                  << "rank: " << rep.rank << "\n"
                  << "dof bound: " << rep.dof_bound << "\n"
                  << "internal flexes: " << rep.internal_flexes << "\n"
                  << "rank threshold: " << fmt(rep.rank_threshold) << "\n"
                  << "classification: " << to_string(rep.classification) << "\n";
        if (claim) std::cout << "claimed: " << *claim << "\n";
        std::cout << "smallest singular values:";
        for (double s : rep.singular_tail(10)) std::cout << " " << fmt(s);
        std::cout << "\n";
      }
      return kOk;
    }

    if (*con_cmd) {
      if (*mirror_cmd) {
        const EmbeddedGraph g = normalize(build_graph(load_segment_source(mirror_src)));
        const MirrorMode mode = mirror_mode == "point" ? MirrorMode::Point : MirrorMode::Line;
        const EmbeddedGraph doubled = mirror_double(g, mode);
        const RefineResult r = refine(doubled);
        if (!r.converged) throw Error(ErrorCode::RealizationFailed, "mirror double did not refine");
        return finish_construction(r.graph, con_out, con_json);
      }
      if (*ring_cmd) {
        std::vector<PartSpec> parts;
        for (const auto& s : ring_srcs) parts.push_back(part_from_source(s));
        return finish_construction(realize(ring_plan(std::move(parts))), con_out, con_json);
      }
      if (*chain_cmd) {
        ChainSpec spec{part_from_source(chain_left), part_from_source(chain_right), part_from_source(chain_spacer),
                       chain_count};
        return finish_construction(chain_extend(spec), con_out, con_json);
      }
      if (*plan_cmd) {
        std::ifstream in(plan_path);
        Json j;
        try {
          j = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorCode::InvalidPlan, std::string("plan is not valid JSON: ") + e.what());
        }
        return finish_construction(realize(plan_from_json(j)), con_out, con_json);
      }
    }

    if (*enum_cmd) {
      const CoverageTable t = combinations_table(Inventory(parse_sizes(enum_inventory)), enum_parts);
      if (enum_json) {
        print_json(to_json(t));
      } else {
        std::cout << format_table(t);
      }
      return kOk;
    }

    if (*cov_cmd) {
      CoverageManifest m = default_manifest();
      if (!cov_manifest.empty()) {
        std::ifstream in(cov_manifest);
        std::stringstream ss;
        ss << in.rdbuf();
        m = parse_manifest(ss.str());
      }
      for (Index off : cov_drop) {
        std::erase_if(m.families, [off](const ArithmeticFamily& f) { return f.offset == off; });
      }
      const CoverageCertificate c = theorem1_coverage(m, cov_max);
      if (cov_json) {
        print_json(to_json(c));
      } else {
        std::cout << "range: " << c.range_start << ".." << c.range_end << "\n";
        if (cov_witnesses) {
          for (const auto& [v, w] : c.witnesses) std::cout << v << " " << to_string(w.kind) << ": " << w.detail << "\n";
        }
        std::cout << "missing:";
        if (c.missing.empty()) std::cout << " none";
        for (Index v : c.missing) std::cout << " " << v;
        std::cout << "\n";
      }
      return c.complete() ? kOk : kDomain;
    }

    if (*cat_cmd) {
      bool all_ok = true;
      Json rows = Json::array();
      for (const auto& name : corpus_names()) {
        const SegmentFile file = load_corpus_file(name);
        std::string status = "ok", summary, rigidity = "-";
        try {
          const EmbeddedGraph g = build_graph(file);
          const RefineResult r = refine(g);
          const VerificationReport rep = verify_matchstick(r.graph);
          summary = rep.summary();
          const auto cv = file.claimed_vertices();
          const auto cp = file.claimed_profile();
          const bool profile_ok = !cp || (*cp == "4-regular" ? rep.classification == Classification::FourRegular
                                                             : rep.classification == Classification::TwoFourRegular);
          if (!r.converged || !rep.is_matchstick() || (cv && *cv != rep.vertex_count) || !profile_ok) {
            status = "FAIL";
          }
          rigidity = to_string(analyze_rigidity(r.graph).classification);
        } catch (const Error& e) {
          status = "FAIL";
          summary = e.what();
        }
        all_ok = all_ok && status == "ok";
        const std::string claimed_rig = file.claimed_rigidity().value_or("-");
        if (cat_json) {
          rows.push_back({{"name", name},
                          {"claimed_vertices", file.claimed_vertices() ? Json(*file.claimed_vertices()) : Json()},
                          {"claimed_profile", file.claimed_profile().value_or("")},
                          {"claimed_rigidity", claimed_rig},
                          {"measured_rigidity", rigidity},
                          {"summary", summary},
                          {"status", status}});
        } else {
          std::printf("%-6s %-4s %-60s claimed %-9s measured %s\n", name.c_str(), status.c_str(), summary.c_str(),
                      claimed_rig.c_str(), rigidity.c_str());
        }
      }
      if (cat_json) print_json(rows);
      return all_ok ? kOk : kDomain;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  }
  return kUsage;
}
