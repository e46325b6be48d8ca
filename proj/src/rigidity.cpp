#include "matchstick/rigidity.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <sstream>

namespace matchstick {

std::string to_string(RigidityClass c) { return c == RigidityClass::Rigid ? "rigid" : "flexible"; }

std::vector<double> RigidityReport::singular_tail(std::size_t n) const {
  std::vector<double> tail(singular_values.rbegin(),
                           singular_values.rbegin() + static_cast<std::ptrdiff_t>(std::min(n, singular_values.size())));
  return tail;
}

RigidityReport analyze_rigidity(const EmbeddedGraph& g, double rank_tol_factor) {
  if (g.vertex_count() < 3) throw Error(ErrorCode::InvalidArgument, "rigidity analysis needs at least 3 vertices");
  if (!g.is_connected()) throw Error(ErrorCode::DisconnectedGraph, "graph is disconnected");
  if (!(rank_tol_factor > 0)) throw Error(ErrorCode::InvalidArgument, "rank_tol_factor must be positive");

  const Matrix<double> R = rigidity_matrix(g);
  Eigen::BDCSVD<Matrix<double>> svd(R);
  const auto& sv = svd.singularValues();

  RigidityReport rep;
  rep.singular_values.assign(sv.data(), sv.data() + sv.size());
  rep.rank_threshold = sv.size() ? rank_tol_factor * sv(0) : 0.0;
  rep.rank = static_cast<Index>(std::count_if(rep.singular_values.begin(), rep.singular_values.end(),
                                              [&](double s) { return s > rep.rank_threshold; }));
  rep.dof_bound = 2 * g.vertex_count() - 3;
  rep.internal_flexes = rep.dof_bound - rep.rank;
  rep.classification = rep.internal_flexes == 0 ? RigidityClass::Rigid : RigidityClass::Flexible;
  return rep;
}

CompositionRigidityVerdict check_composition_rigidity(const RigidityReport& whole,
                                                      std::span<const RigidityReport> parts) {
  CompositionRigidityVerdict v;
  v.whole_rigid = whole.rigid();
  v.all_parts_rigid = !parts.empty() && std::all_of(parts.begin(), parts.end(),
                                                    [](const RigidityReport& r) { return r.rigid(); });
  v.rule_applies = v.all_parts_rigid && (parts.size() == 2 || parts.size() == 3);
  v.consistent = !v.rule_applies || v.whole_rigid;

  std::ostringstream os;
  if (!v.rule_applies) {
    os << "rule not applicable (" << parts.size() << " parts, "
       << (v.all_parts_rigid ? "all rigid" : "not all rigid") << "); whole is " << to_string(whole.classification);
  } else if (v.consistent) {
    os << "consistent: " << parts.size() << " rigid parts, whole rigid (rank " << whole.rank << ")";
  } else {
    os << "inconsistent: " << parts.size() << " rigid parts but whole has rank " << whole.rank << " of "
       << whole.dof_bound;
    for (std::size_t i = 0; i < parts.size(); ++i) os << "; part " << i << " rank " << parts[i].rank;
  }
  v.message = os.str();
  return v;
}

}  // namespace matchstick
