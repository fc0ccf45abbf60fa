#pragma once

#include "facering/complex.hpp"
#include "facering/graph.hpp"

namespace fixtures {

using facering::Graph;
using facering::SimplicialComplex;

inline SimplicialComplex boundary_triangle() {
  return SimplicialComplex::from_vertex_lists(3, {{1, 2}, {1, 3}, {2, 3}});
}

inline SimplicialComplex two_edges() {
  return SimplicialComplex::from_vertex_lists(4, {{1, 2}, {3, 4}});
}

inline SimplicialComplex four_cycle() {
  return SimplicialComplex::from_vertex_lists(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

inline SimplicialComplex path3() {
  return SimplicialComplex::from_vertex_lists(3, {{1, 2}, {2, 3}});
}

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
  auto g = path_graph(n);
  g.add_edge(1, n);
  return g;
}

}  // namespace fixtures
