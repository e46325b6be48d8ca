#pragma once

#include <span>
#include <string>
#include <vector>

#include "matchstick/model.hpp"
#include "matchstick/refine.hpp"

namespace matchstick {

enum class RigidityClass { Rigid, Flexible };

std::string to_string(RigidityClass c);

/// First-order (infinitesimal) rigidity of a bar-joint framework.
struct RigidityReport {
  Index rank = 0;
  /// 2v - 3: the motions left after removing planar rigid-body motions.
  Index dof_bound = 0;
  Index internal_flexes = 0;
  RigidityClass classification = RigidityClass::Rigid;
  /// Descending.
  std::vector<double> singular_values;
  /// Absolute cutoff used for the rank (rank_tol_factor * largest value).
  double rank_threshold = 0;

  bool rigid() const { return classification == RigidityClass::Rigid; }
  /// Up to `n` smallest singular values, ascending.
  std::vector<double> singular_tail(std::size_t n = 10) const;
};

/// The e x 2v rigidity matrix; same entries as residual_jacobian.
template <typename Scalar>
Matrix<Scalar> rigidity_matrix(const BasicEmbeddedGraph<Scalar>& g) {
  return residual_jacobian(g);
}

/// Rank = number of singular values above rank_tol_factor * sigma_max.
RigidityReport analyze_rigidity(const EmbeddedGraph& g, double rank_tol_factor = 1e-8);

struct CompositionRigidityVerdict {
  /// The 2-or-3-part rule applies (all parts rigid and 2 or 3 of them).
  bool rule_applies = false;
  bool all_parts_rigid = false;
  bool whole_rigid = false;
  bool consistent = true;
  std::string message;
};

/// Checks that a composition of 2 or 3 rigid parts came out rigid.
CompositionRigidityVerdict check_composition_rigidity(const RigidityReport& whole,
                                                      std::span<const RigidityReport> parts);

}  // namespace matchstick
