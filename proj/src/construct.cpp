#include "matchstick/construct.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "matchstick/geometry.hpp"

namespace matchstick {

namespace {

std::string plan_error(const std::string& msg) { return "invalid plan: " + msg; }

Index slot_vertex(const EmbeddedGraph& g, Index slot) {
  const auto d2 = g.degree_two_vertices();
  if (slot < 0 || slot >= static_cast<Index>(d2.size())) {
    throw Error(ErrorCode::InvalidPlan, plan_error("slot " + std::to_string(slot) + " does not exist in part '" +
                                                   g.name() + "'"));
  }
  return d2[static_cast<std::size_t>(slot)];
}

/// Rotation plus midpoint alignment carrying segment (s0, s1) onto (t0, t1).
RigidMotion align_segment(const Eigen::Vector2d& s0, const Eigen::Vector2d& s1, const Eigen::Vector2d& t0,
                          const Eigen::Vector2d& t1) {
  const Eigen::Vector2d ds = s1 - s0;
  const Eigen::Vector2d dt = t1 - t0;
  const double angle = std::atan2(dt.y(), dt.x()) - std::atan2(ds.y(), ds.x());
  RigidMotion m;
  m.linear = rotation2(angle);
  m.translation = 0.5 * (t0 + t1) - m.linear * (0.5 * (s0 + s1));
  return m;
}

Coordinates<double> apply(const RigidMotion& m, const Coordinates<double>& pts) {
  Coordinates<double> out = pts * m.linear.transpose();
  out.rowwise() += m.translation.transpose();
  return out;
}

// Union of parts with per-part vertex offsets.
struct Assembly {
  std::vector<Index> offset;
  std::vector<Edge> edges;
  Index vertex_count = 0;
};

Assembly assemble(const std::vector<EmbeddedGraph>& parts) {
  Assembly a;
  for (const auto& g : parts) {
    a.offset.push_back(a.vertex_count);
    for (const Edge& e : g.edges()) a.edges.emplace_back(e.u + a.vertex_count, e.v + a.vertex_count);
    a.vertex_count += g.vertex_count();
  }
  return a;
}

struct CycleOrder {
  std::vector<Index> parts;       // traversal order
  std::vector<Index> in_vertex;   // local vertex joined to the predecessor
  std::vector<Index> out_vertex;  // local vertex joined to the successor
};

// A simple cycle of >= 3 parts, each with exactly two identifications to
// two distinct neighbours. Traversal leaves part 0 through the first
// identification that mentions it.
std::optional<CycleOrder> simple_cycle(const CompositionPlan& plan, const std::vector<EmbeddedGraph>& parts) {
  const Index k = plan.subgraph_count();
  if (k < 3 || static_cast<Index>(plan.identifications.size()) != k) return std::nullopt;
  std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < plan.identifications.size(); ++i) {
    incident[static_cast<std::size_t>(plan.identifications[i].part_a)].push_back(i);
    incident[static_cast<std::size_t>(plan.identifications[i].part_b)].push_back(i);
  }
  for (const auto& inc : incident) {
    if (inc.size() != 2) return std::nullopt;
  }

  CycleOrder order;
  order.in_vertex.assign(static_cast<std::size_t>(k), -1);
  order.out_vertex.assign(static_cast<std::size_t>(k), -1);
  std::vector<char> used(plan.identifications.size(), 0);
  std::vector<char> visited(static_cast<std::size_t>(k), 0);
  Index cur = 0;
  std::size_t via = incident[0][0];
  order.parts.push_back(0);
  visited[0] = 1;
  for (Index step = 0; step < k; ++step) {
    const auto& id = plan.identifications[via];
    used[via] = 1;
    const bool cur_is_a = id.part_a == cur;
    const Index next = cur_is_a ? id.part_b : id.part_a;
    order.out_vertex[static_cast<std::size_t>(step)] =
        slot_vertex(parts[static_cast<std::size_t>(cur)], cur_is_a ? id.slot_a : id.slot_b);
    const Index next_in = slot_vertex(parts[static_cast<std::size_t>(next)], cur_is_a ? id.slot_b : id.slot_a);
    if (step + 1 == k) {
      if (next != 0) return std::nullopt;
      order.in_vertex[0] = next_in;
      break;
    }
    if (visited[static_cast<std::size_t>(next)]) return std::nullopt;
    visited[static_cast<std::size_t>(next)] = 1;
    order.parts.push_back(next);
    order.in_vertex[static_cast<std::size_t>(step + 1)] = next_in;
    const auto& inc = incident[static_cast<std::size_t>(next)];
    const std::size_t other = inc[0] == via ? inc[1] : inc[0];
    if (used[other]) return std::nullopt;
    via = other;
    cur = next;
  }
  return order;
}

}  // namespace

void validate_plan(const CompositionPlan& plan) {
  const Index k = plan.subgraph_count();
  if (k == 0) throw Error(ErrorCode::InvalidPlan, plan_error("no parts"));
  std::set<std::pair<Index, Index>> used;
  std::vector<Index> parent(static_cast<std::size_t>(k));
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& id : plan.identifications) {
    for (auto [p, s] : {std::pair{id.part_a, id.slot_a}, std::pair{id.part_b, id.slot_b}}) {
      if (p < 0 || p >= k) throw Error(ErrorCode::InvalidPlan, plan_error("part index out of range"));
      slot_vertex(plan.parts[static_cast<std::size_t>(p)].graph, s);
      if (!used.insert({p, s}).second) {
        throw Error(ErrorCode::InvalidPlan, plan_error("slot " + std::to_string(s) + " of part " +
                                                       std::to_string(p) + " is used twice"));
      }
    }
    if (id.part_a == id.part_b) throw Error(ErrorCode::InvalidPlan, plan_error("a part cannot be glued to itself"));
    parent[static_cast<std::size_t>(find(id.part_a))] = find(id.part_b);
  }
  for (Index p = 1; p < k; ++p) {
    if (find(p) != find(0)) throw Error(ErrorCode::InvalidPlan, plan_error("parts are not connected"));
  }
}

Index predicted_vertex_count(const CompositionPlan& plan) {
  Index total = 0;
  for (const auto& p : plan.parts) total += p.graph.vertex_count();
  return total - static_cast<Index>(plan.identifications.size());
}

Index predicted_edge_count(const CompositionPlan& plan) {
  Index total = 0;
  for (const auto& p : plan.parts) total += p.graph.edge_count();
  return total;
}

DegreeProfile predicted_degree_profile(const CompositionPlan& plan) {
  DegreeProfile prof;
  for (const auto& p : plan.parts) {
    for (const auto& [d, c] : degree_profile(p.graph).counts) prof.counts[d] += c;
  }
  const Index n = static_cast<Index>(plan.identifications.size());
  prof.counts[2] -= 2 * n;
  prof.counts[4] += n;
  std::erase_if(prof.counts, [](const auto& kv) { return kv.second == 0; });
  return prof;
}

RigidMotion mirror_transform(const EmbeddedGraph& g, Index a, Index b, MirrorMode mode) {
  const Eigen::Vector2d pa = g.vertex(a);
  const Eigen::Vector2d pb = g.vertex(b);
  RigidMotion m;
  if (mode == MirrorMode::Point) {
    m.linear = -Eigen::Matrix2d::Identity();
    m.translation = pa + pb;
  } else {
    const Eigen::Vector2d u = (pb - pa).normalized();
    m.linear = 2.0 * u * u.transpose() - Eigen::Matrix2d::Identity();
    m.translation = pa - m.linear * pa;
  }
  return m;
}

EmbeddedGraph mirror_double(const EmbeddedGraph& g, Index a, Index b, MirrorMode mode, double axis_clearance) {
  const Index nv = g.vertex_count();
  if (a < 0 || b < 0 || a >= nv || b >= nv || a == b) {
    throw Error(ErrorCode::InvalidArgument, "mirror axis vertices out of range");
  }
  const auto deg = g.degrees();
  if (deg[static_cast<std::size_t>(a)] != 2 || deg[static_cast<std::size_t>(b)] != 2) {
    throw Error(ErrorCode::WrongDegree, "mirror axis vertices must have degree 2");
  }
  if (mode == MirrorMode::Line) {
    const Eigen::Vector2d pa = g.vertex(a);
    const Eigen::Vector2d u = (g.vertex(b) - pa).normalized();
    for (Index i = 0; i < nv; ++i) {
      if (i == a || i == b) continue;
      const double dist = std::abs(cross2<double>(u, g.vertex(i) - pa)) / g.unit();
      if (dist < axis_clearance) {
        throw Error(ErrorCode::VertexOnAxis, "vertex " + std::to_string(i) + " lies on the mirror axis");
      }
    }
  }

  const RigidMotion m = mirror_transform(g, a, b, mode);
  std::vector<Index> image(static_cast<std::size_t>(nv));
  Coordinates<double> coords(2 * nv - 2, 2);
  coords.topRows(nv) = g.vertices();
  Index next = nv;
  for (Index i = 0; i < nv; ++i) {
    if (i == a) {
      image[static_cast<std::size_t>(i)] = mode == MirrorMode::Line ? a : b;
    } else if (i == b) {
      image[static_cast<std::size_t>(i)] = mode == MirrorMode::Line ? b : a;
    } else {
      coords.row(next) = m(g.vertex(i)).transpose();
      image[static_cast<std::size_t>(i)] = next++;
    }
  }
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : g.edges()) {
    edges.emplace_back(image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)]);
  }
  const std::string suffix = mode == MirrorMode::Line ? "-mirror" : "-point-mirror";
  return EmbeddedGraph(std::move(coords), std::move(edges), g.unit(), g.name() + suffix);
}

EmbeddedGraph mirror_double(const EmbeddedGraph& g, MirrorMode mode, double axis_clearance) {
  const auto d2 = g.degree_two_vertices();
  if (d2.size() != 2) throw Error(ErrorCode::WrongDegree, "graph must have exactly two degree-2 vertices");
  return mirror_double(g, d2[0], d2[1], mode, axis_clearance);
}

std::vector<Eigen::Vector2d> cyclic_polygon(const std::vector<double>& sides) {
  const std::size_t k = sides.size();
  if (k < 3) throw Error(ErrorCode::InvalidArgument, "a polygon needs at least three sides");
  const auto longest = static_cast<std::size_t>(std::max_element(sides.begin(), sides.end()) - sides.begin());
  const double dmax = sides[longest];
  const double rest = std::accumulate(sides.begin(), sides.end(), 0.0) - dmax;
  if (!(dmax > 0) || !(rest > dmax)) {
    throw Error(ErrorCode::RealizationFailed, "join gaps violate the polygon inequality");
  }
  auto theta = [](double d, double r) { return 2.0 * std::asin(std::min(1.0, d / (2.0 * r))); };
  auto others = [&](double r) {
    double s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (i != longest) s += theta(sides[i], r);
    }
    return s;
  };
  const double r0 = dmax / 2;
  // Centre inside the polygon iff all central angles fit into 2 pi with the
  // longest side spanning at most pi.
  const bool centre_inside = others(r0) + std::numbers::pi >= 2 * std::numbers::pi;
  auto f = [&](double r) {
    return centre_inside ? others(r) + theta(dmax, r) - 2 * std::numbers::pi : others(r) - theta(dmax, r);
  };
  double lo = r0, hi = r0;
  // f(lo) and f(hi) have opposite signs: decreasing in the first case,
  // increasing in the second.
  do {
    hi *= 2;
  } while ((centre_inside ? f(hi) > 0 : f(hi) < 0) && hi < 1e12);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool go_right = centre_inside ? f(mid) > 0 : f(mid) < 0;
    (go_right ? lo : hi) = mid;
  }
  const double r = 0.5 * (lo + hi);

  std::vector<Eigen::Vector2d> pts;
  double phi = 0;
  for (std::size_t i = 0; i < k; ++i) {
    pts.emplace_back(r * std::cos(phi), r * std::sin(phi));
    const double t = theta(sides[i], r);
    phi += (i == longest && !centre_inside) ? -t : t;
  }
  return pts;
}

EmbeddedGraph realize(const CompositionPlan& plan, const RefineOptions& opts) {
  validate_plan(plan);
  const Index k = plan.subgraph_count();

  std::vector<EmbeddedGraph> parts;
  for (const auto& p : plan.parts) {
    EmbeddedGraph g = normalize(p.graph);
    parts.push_back(p.reflect ? reflected(g) : g);
  }
  std::vector<std::optional<Coordinates<double>>> placed(static_cast<std::size_t>(k));

  if (auto cycle = simple_cycle(plan, parts)) {
    std::vector<double> gaps;
    for (Index m = 0; m < k; ++m) {
      const auto& g = parts[static_cast<std::size_t>(cycle->parts[static_cast<std::size_t>(m)])];
      gaps.push_back((g.vertex(cycle->out_vertex[static_cast<std::size_t>(m)]) -
                      g.vertex(cycle->in_vertex[static_cast<std::size_t>(m)]))
                         .norm());
    }
    const auto corners = cyclic_polygon(gaps);
    for (Index m = 0; m < k; ++m) {
      const auto sm = static_cast<std::size_t>(m);
      const auto& g = parts[static_cast<std::size_t>(cycle->parts[sm])];
      const RigidMotion mo = align_segment(g.vertex(cycle->in_vertex[sm]), g.vertex(cycle->out_vertex[sm]),
                                           corners[sm], corners[(sm + 1) % static_cast<std::size_t>(k)]);
      placed[static_cast<std::size_t>(cycle->parts[sm])] = apply(mo, g.vertices());
    }
  } else {
    placed[0] = parts[0].vertices();
    std::deque<Index> queue{0};
    std::vector<char> queued(static_cast<std::size_t>(k), 0);
    queued[0] = 1;
    std::vector<Index> order;
    while (!queue.empty()) {
      const Index p = queue.front();
      queue.pop_front();
      order.push_back(p);
      for (const auto& id : plan.identifications) {
        for (Index q : {id.part_a == p ? id.part_b : Index{-1}, id.part_b == p ? id.part_a : Index{-1}}) {
          if (q >= 0 && !queued[static_cast<std::size_t>(q)]) {
            queued[static_cast<std::size_t>(q)] = 1;
            queue.push_back(q);
          }
        }
      }
    }
    for (std::size_t oi = 1; oi < order.size(); ++oi) {
      const Index p = order[oi];
      const auto& g = parts[static_cast<std::size_t>(p)];
      std::vector<std::pair<Index, Eigen::Vector2d>> anchors;
      for (const auto& id : plan.identifications) {
        Index mine = -1, other_part = -1, other_slot = -1;
        if (id.part_a == p) {
          mine = slot_vertex(g, id.slot_a);
          other_part = id.part_b;
          other_slot = id.slot_b;
        } else if (id.part_b == p) {
          mine = slot_vertex(g, id.slot_b);
          other_part = id.part_a;
          other_slot = id.slot_a;
        } else {
          continue;
        }
        const auto& target = placed[static_cast<std::size_t>(other_part)];
        if (!target) continue;
        const Index tv = slot_vertex(parts[static_cast<std::size_t>(other_part)], other_slot);
        anchors.emplace_back(mine, target->row(tv).transpose());
      }
      RigidMotion mo;
      if (anchors.size() >= 2) {
        mo = align_segment(g.vertex(anchors[0].first), g.vertex(anchors[1].first), anchors[0].second,
                           anchors[1].second);
      } else {
        // Single anchor: hang the part away from everything placed so far.
        Eigen::Vector2d placed_centre = Eigen::Vector2d::Zero();
        Index count = 0;
        for (const auto& c : placed) {
          if (!c) continue;
          placed_centre += c->colwise().sum().transpose();
          count += c->rows();
        }
        placed_centre /= static_cast<double>(count);
        const Eigen::Vector2d anchor = anchors[0].second;
        const Eigen::Vector2d local = g.vertex(anchors[0].first);
        Eigen::Vector2d out_dir = anchor - placed_centre;
        if (out_dir.norm() < 1e-12) out_dir = Eigen::Vector2d::UnitX();
        const Eigen::Vector2d body = centroid(g) - local;
        const double angle = std::atan2(out_dir.y(), out_dir.x()) - std::atan2(body.y(), body.x());
        mo.linear = rotation2(angle);
        mo.translation = anchor - mo.linear * local;
      }
      placed[static_cast<std::size_t>(p)] = apply(mo, g.vertices());
    }
  }

  // Stack, solve with coincidences, merge.
  const Assembly asmb = assemble(parts);
  Coordinates<double> coords(asmb.vertex_count, 2);
  for (Index p = 0; p < k; ++p) {
    coords.middleRows(asmb.offset[static_cast<std::size_t>(p)], parts[static_cast<std::size_t>(p)].vertex_count()) =
        *placed[static_cast<std::size_t>(p)];
  }
  std::vector<std::pair<Index, Index>> coincide;
  for (const auto& id : plan.identifications) {
    const Index a = asmb.offset[static_cast<std::size_t>(id.part_a)] +
                    slot_vertex(parts[static_cast<std::size_t>(id.part_a)], id.slot_a);
    const Index b = asmb.offset[static_cast<std::size_t>(id.part_b)] +
                    slot_vertex(parts[static_cast<std::size_t>(id.part_b)], id.slot_b);
    coincide.emplace_back(std::min(a, b), std::max(a, b));
  }
  const EmbeddedGraph stacked(std::move(coords), asmb.edges, 1.0, plan.name);
  const RefineResult solved = refine(stacked, opts, coincide);
  if (!solved.converged) {
    std::ostringstream os;
    os << "realization failed for plan '" << plan.name << "': residual " << solved.final_residual
       << ", coincidence gap " << solved.final_coincidence_gap << " after " << solved.iterations << " iterations";
    throw Error(ErrorCode::RealizationFailed, os.str());
  }

  std::vector<Index> rep(static_cast<std::size_t>(asmb.vertex_count));
  std::iota(rep.begin(), rep.end(), Index{0});
  for (const auto& [a, b] : coincide) rep[static_cast<std::size_t>(b)] = a;
  std::vector<Index> new_index(rep.size(), -1);
  Index n = 0;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (rep[i] == static_cast<Index>(i)) new_index[i] = n++;
  }
  Coordinates<double> merged = Coordinates<double>::Zero(n, 2);
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < rep.size(); ++i) {
    const Index t = new_index[static_cast<std::size_t>(rep[i])];
    merged.row(t) += solved.graph.vertices().row(static_cast<Index>(i));
    ++weight[static_cast<std::size_t>(t)];
  }
  for (Index t = 0; t < n; ++t) merged.row(t) /= weight[static_cast<std::size_t>(t)];
  std::vector<Edge> edges;
  for (const Edge& e : asmb.edges) {
    edges.emplace_back(new_index[static_cast<std::size_t>(rep[static_cast<std::size_t>(e.u)])],
                       new_index[static_cast<std::size_t>(rep[static_cast<std::size_t>(e.v)])]);
  }
  return EmbeddedGraph(std::move(merged), std::move(edges), 1.0, plan.name);
}

CompositionPlan ring_plan(std::vector<PartSpec> parts, std::string name) {
  const Index k = static_cast<Index>(parts.size());
  if (k < 2) throw Error(ErrorCode::InvalidPlan, plan_error("a ring needs at least two parts"));
  CompositionPlan plan;
  plan.name = std::move(name);
  for (Index i = 0; i < k; ++i) {
    auto& part = parts[static_cast<std::size_t>(i)];
    const auto d2 = part.graph.degree_two_vertices();
    if (d2.size() != 2) {
      throw Error(ErrorCode::InvalidPlan, plan_error("ring part '" + part.label + "' needs exactly two degree-2 vertices"));
    }
    // Outward is to the right of the counter-clockwise side slot 0 -> slot 1.
    part.reflect = body_side(part.graph, d2[0], d2[1]) > 0;
    plan.identifications.push_back({i, 1, (i + 1) % k, 0});
  }
  plan.parts = std::move(parts);
  return plan;
}

SpacerPairs spacer_pairs(const EmbeddedGraph& spacer) {
  const auto d2 = spacer.degree_two_vertices();
  if (d2.size() != 4) throw Error(ErrorCode::InvalidPlan, plan_error("a spacer needs exactly four degree-2 vertices"));
  std::set<Edge> adjacent(spacer.edges().begin(), spacer.edges().end());
  auto dist = [&](Index s, Index t) {
    return (spacer.vertex(d2[static_cast<std::size_t>(s)]) - spacer.vertex(d2[static_cast<std::size_t>(t)])).norm();
  };
  // Slot 0 pairs with whichever non-adjacent slot gives the shortest total.
  SpacerPairs best;
  double best_len = std::numeric_limits<double>::infinity();
  for (Index mate = 1; mate < 4; ++mate) {
    Index rest[2];
    int r = 0;
    for (Index s = 1; s < 4; ++s) {
      if (s != mate) rest[r++] = s;
    }
    auto is_adj = [&](Index s, Index t) {
      return adjacent.count(Edge(d2[static_cast<std::size_t>(s)], d2[static_cast<std::size_t>(t)])) > 0;
    };
    if (is_adj(0, mate) || is_adj(rest[0], rest[1])) continue;
    const double len = dist(0, mate) + dist(rest[0], rest[1]);
    if (len < best_len) {
      best_len = len;
      best.in0 = 0;
      best.in1 = mate;
      // out0 is the one nearer to in0.
      const bool swap = dist(0, rest[1]) < dist(0, rest[0]);
      best.out0 = swap ? rest[1] : rest[0];
      best.out1 = swap ? rest[0] : rest[1];
    }
  }
  if (!std::isfinite(best_len)) throw Error(ErrorCode::InvalidPlan, plan_error("spacer join vertices cannot be paired"));
  return best;
}

Index ChainSpec::predicted_vertex_count() const {
  return left.graph.vertex_count() + right.graph.vertex_count() + spacer_count * spacer.graph.vertex_count() -
         2 * (spacer_count + 1);
}

CompositionPlan chain_plan(const ChainSpec& spec, std::string name) {
  if (spec.spacer_count < 0) throw Error(ErrorCode::InvalidPlan, plan_error("negative spacer count"));
  for (const PartSpec* end : {&spec.left, &spec.right}) {
    if (end->graph.degree_two_vertices().size() != 2) {
      throw Error(ErrorCode::InvalidPlan, plan_error("chain end '" + end->label + "' needs exactly two degree-2 vertices"));
    }
  }
  const SpacerPairs sp = spec.spacer_count > 0 ? spacer_pairs(spec.spacer.graph) : SpacerPairs{};

  CompositionPlan plan;
  plan.name = std::move(name);
  auto side_of = [](const PartSpec& part, Index s0, Index s1) {
    const auto d2 = part.graph.degree_two_vertices();
    return body_side(part.graph, d2[static_cast<std::size_t>(s0)], d2[static_cast<std::size_t>(s1)]);
  };

  PartSpec left = spec.left;
  left.reflect = false;
  plan.parts.push_back(left);
  // Side of the last placed part relative to its outgoing join pair.
  int side = side_of(left, 0, 1);
  Index out0 = 0, out1 = 1;

  auto attach = [&](PartSpec part, Index in0, Index in1) {
    part.reflect = side_of(part, in0, in1) == side;
    const Index idx = plan.subgraph_count();
    plan.identifications.push_back({idx - 1, out0, idx, in0});
    plan.identifications.push_back({idx - 1, out1, idx, in1});
    plan.parts.push_back(std::move(part));
    return plan.parts.back().reflect;
  };

  for (Index i = 0; i < spec.spacer_count; ++i) {
    const bool refl = attach(spec.spacer, sp.in0, sp.in1);
    side = side_of(spec.spacer, sp.out0, sp.out1) * (refl ? -1 : 1);
    out0 = sp.out0;
    out1 = sp.out1;
  }
  attach(spec.right, 0, 1);
  return plan;
}

EmbeddedGraph chain_extend(const ChainSpec& spec, const RefineOptions& opts) {
  std::ostringstream name;
  name << spec.left.label << "+" << spec.spacer_count << "x" << spec.spacer.label << "+" << spec.right.label;
  return realize(chain_plan(spec, name.str()), opts);
}

}  // namespace matchstick
