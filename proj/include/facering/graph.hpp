#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "facering/complex.hpp"
#include "facering/face.hpp"

namespace facering {

struct Density;

/// Simple undirected graph on [n], one adjacency bitmask per vertex.
class Graph {
 public:
  /// Throws PreconditionError for loops, endpoints outside [1, n], or n
  /// outside [1, 63]. Duplicate edges collapse.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph empty(int n);
  static Graph complete(int n);

  int n() const { return n_; }
  bool has_edge(int u, int v) const;
  Face neighbors(int v) const { return adjacency_[v - 1]; }
  /// Increasing pairs (u < v), lexicographic.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

  void add_edge(int u, int v);

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n), 0) {}

  int n_ = 1;
  std::vector<Face> adjacency_;
};

Graph complement(const Graph& g);

/// Faces are the cliques of g; facets are the maximal cliques (Bron–Kerbosch
/// with pivoting).
SimplicialComplex clique_complex(const Graph& g);

/// Vertices and edges of the complex.
Graph one_skeleton(const SimplicialComplex& complex);

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination order when chordal.
  std::vector<int> elimination_order;
  /// Chordless cycle of length >= 4 when not chordal.
  std::vector<int> chordless_cycle;
};

/// Maximum cardinality search, then a perfect-elimination check.
ChordalityResult is_chordal(const Graph& g);

/// Each vertex's later neighbours in `order` form a clique.
bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order);

/// Consecutive vertices adjacent (cyclically), no other adjacencies, length >= 4.
bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle);

/// Inclusion-minimal subsets of [n] that are not faces, canonical order;
/// these generate the Stanley–Reisner ideal. Throws for the void complex.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex);

/// Random chordal graph: vertices join in a random order, each attaching to a
/// random subset of one current maximal clique (each member kept with
/// probability `density`). Deterministic in `seed`.
Graph random_chordal(int n, const Density& density, std::uint64_t seed);

}  // namespace facering
