#pragma once

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "matchstick/model.hpp"

namespace testing_support {

using matchstick::Coordinates;
using matchstick::Edge;
using matchstick::EmbeddedGraph;
using matchstick::Index;

inline EmbeddedGraph triangle(double unit = 1.0) {
  Coordinates<double> p(3, 2);
  p << 0, 0, unit, 0, unit / 2, unit * std::sqrt(3.0) / 2;
  return EmbeddedGraph(p, {{0, 1}, {1, 2}, {0, 2}}, unit, "triangle");
}

/// Rhombus made of two unit triangles sharing edge 1-2; tips 0 and 3 have degree 2.
inline EmbeddedGraph diamond(bool with_diagonal = true) {
  const double h = std::sqrt(3.0) / 2;
  Coordinates<double> p(4, 2);
  p << 0, 0, 0.5, h, 0.5, -h, 1.0, 0;
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  if (with_diagonal) e.emplace_back(1, 2);
  return EmbeddedGraph(p, e, 1.0, with_diagonal ? "diamond" : "rhombus");
}

/// Strip of n unit triangles along the x axis (n + 2 vertices).
inline EmbeddedGraph triangle_strip(int n) {
  const double h = std::sqrt(3.0) / 2;
  const int v = n + 2;
  Coordinates<double> p(v, 2);
  for (int i = 0; i < v; ++i) {
    p(i, 0) = 0.5 * i;
    p(i, 1) = (i % 2) ? h : 0.0;
  }
  std::vector<Edge> e;
  for (int i = 0; i + 1 < v; ++i) e.emplace_back(i, i + 1);
  for (int i = 0; i + 2 < v; ++i) e.emplace_back(i, i + 2);
  return EmbeddedGraph(p, e, 1.0, "strip");
}

/// Random simple graph with coordinates in [0, scale]^2.
inline EmbeddedGraph random_graph(std::mt19937_64& rng, int v, double edge_prob, double scale = 10.0) {
  std::uniform_real_distribution<double> coord(0.0, scale);
  std::bernoulli_distribution keep(edge_prob);
  Coordinates<double> p(v, 2);
  for (int i = 0; i < v; ++i) p.row(i) << coord(rng), coord(rng);
  std::vector<Edge> e;
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      if (keep(rng)) e.emplace_back(i, j);
    }
  }
  return EmbeddedGraph(p, e, 1.0, "random");
}

inline std::multiset<long long> rounded_lengths(const EmbeddedGraph& g) {
  std::multiset<long long> out;
  for (double l : matchstick::edge_lengths(g)) out.insert(std::llround(l * 1e9));
  return out;
}

}  // namespace testing_support
