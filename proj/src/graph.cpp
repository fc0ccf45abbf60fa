#include "facering/graph.hpp"

#include <algorithm>
#include <numeric>

#include "facering/errors.hpp"
#include "facering/generators.hpp"

namespace facering {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g = empty(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::empty(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw PreconditionError("vertex count " + std::to_string(n) + " outside [1," +
                            std::to_string(kMaxVertices) + "]");
  }
  return Graph(n);
}

Graph Graph::complete(int n) {
  Graph g = empty(n);
  for (int v = 1; v <= n; ++v) g.adjacency_[v - 1] = ground_face(n) & ~vertex_bit(v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_) {
    throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} outside [1," + std::to_string(n_) + "]");
  }
  if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
  adjacency_[u - 1] |= vertex_bit(v);
  adjacency_[v - 1] |= vertex_bit(u);
}

bool Graph::has_edge(int u, int v) const {
  return (adjacency_[u - 1] & vertex_bit(v)) != 0;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u) {
    for (int v : vertices_of(adjacency_[u - 1])) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Face a : adjacency_) twice += static_cast<std::size_t>(face_size(a));
  return twice / 2;
}

Graph complement(const Graph& g) {
  Graph out = Graph::empty(g.n());
  for (int u = 1; u <= g.n(); ++u) {
    for (int v = u + 1; v <= g.n(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

namespace {

void bron_kerbosch(const Graph& g, Face r, Face p, Face x, std::vector<Face>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  int pivot = 0;
  int best = -1;
  for (int u : vertices_of(p | x)) {
    const int score = face_size(p & g.neighbors(u));
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (int v : vertices_of(p & ~g.neighbors(pivot))) {
    const Face nv = g.neighbors(v);
    bron_kerbosch(g, r | vertex_bit(v), p & nv, x & nv, out);
    p &= ~vertex_bit(v);
    x |= vertex_bit(v);
  }
}

}  // namespace

SimplicialComplex clique_complex(const Graph& g) {
  std::vector<Face> cliques;
  bron_kerbosch(g, 0, ground_face(g.n()), 0, cliques);
  return SimplicialComplex::from_facets(g.n(), std::move(cliques));
}

Graph one_skeleton(const SimplicialComplex& complex) {
  Graph g = Graph::empty(complex.n());
  for (Face f : complex.facets()) {
    const auto vs = vertices_of(f);
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) g.add_edge(vs[a], vs[b]);
    }
  }
  return g;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n()) return false;
  Face seen = 0;
  for (int v : order) {
    if (v < 1 || v > g.n() || (seen & vertex_bit(v))) return false;
    seen |= vertex_bit(v);
  }
  Face later = ground_face(g.n());
  for (int v : order) {
    later &= ~vertex_bit(v);
    const Face nbrs = g.neighbors(v) & later;
    for (int w : vertices_of(nbrs)) {
      if (!is_subset(nbrs & ~vertex_bit(w), g.neighbors(w))) return false;
    }
  }
  return true;
}

bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 4) return false;
  Face seen = 0;
  for (int v : cycle) {
    if (v < 1 || v > g.n() || (seen & vertex_bit(v))) return false;
    seen |= vertex_bit(v);
  }
  for (std::size_t a = 0; a < len; ++a) {
    for (std::size_t b = a + 1; b < len; ++b) {
      const bool consecutive = b == a + 1 || (a == 0 && b == len - 1);
      if (g.has_edge(cycle[a], cycle[b]) != consecutive) return false;
    }
  }
  return true;
}

namespace {

std::vector<int> find_chordless_cycle(const Graph& g) {
  const Face ground = ground_face(g.n());
  for (int v = 1; v <= g.n(); ++v) {
    const auto nbrs = vertices_of(g.neighbors(v));
    for (std::size_t ia = 0; ia < nbrs.size(); ++ia) {
      for (std::size_t ib = ia + 1; ib < nbrs.size(); ++ib) {
        const int a = nbrs[ia];
        const int b = nbrs[ib];
        if (g.has_edge(a, b)) continue;
        // Shortest a-b path avoiding the closed neighbourhood of v: together
        // with v it closes an induced cycle.
        const Face allowed = (ground & ~(g.neighbors(v) | vertex_bit(v))) |
                             vertex_bit(a) | vertex_bit(b);
        std::vector<int> parent(static_cast<std::size_t>(g.n() + 1), 0);
        std::vector<int> queue{a};
        Face reached = vertex_bit(a);
        for (std::size_t head = 0; head < queue.size(); ++head) {
          const int u = queue[head];
          for (int w : vertices_of(g.neighbors(u) & allowed & ~reached)) {
            reached |= vertex_bit(w);
            parent[static_cast<std::size_t>(w)] = u;
            queue.push_back(w);
          }
        }
        if (!(reached & vertex_bit(b))) continue;
        std::vector<int> path;
        for (int u = b; u != a; u = parent[static_cast<std::size_t>(u)]) path.push_back(u);
        path.push_back(a);
        std::vector<int> cycle{v};
        cycle.insert(cycle.end(), path.rbegin(), path.rend());
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> visit;
  Face numbered = 0;
  for (int step = 0; step < n; ++step) {
    int pick = 0;
    for (int v = 1; v <= n; ++v) {
      if (numbered & vertex_bit(v)) continue;
      if (pick == 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) {
        pick = v;
      }
    }
    visit.push_back(pick);
    numbered |= vertex_bit(pick);
    for (int u : vertices_of(g.neighbors(pick) & ~numbered)) ++weight[static_cast<std::size_t>(u)];
  }
  ChordalityResult out;
  out.elimination_order.assign(visit.rbegin(), visit.rend());
  out.chordal = is_perfect_elimination_order(g, out.elimination_order);
  if (!out.chordal) {
    out.elimination_order.clear();
    out.chordless_cycle = find_chordless_cycle(g);
    if (!is_chordless_cycle(g, out.chordless_cycle)) {
      throw InconsistencyError("maximum cardinality search rejected a graph "
                               "without a chordless cycle");
    }
  }
  return out;
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
  if (complex.is_void()) {
    throw PreconditionError("minimal non-faces of the void complex");
  }
  std::vector<Face> out;
  const int n = complex.n();
  for (const auto& group : enumerate_faces(complex)) {
    for (Face f : group) {
      for (int v = 1; v <= n; ++v) {
        const Face s = f | vertex_bit(v);
        if (s == f || complex.contains(s)) continue;
        bool minimal = true;
        for (Face rest = s; rest && minimal; rest &= rest - 1) {
          minimal = complex.contains(s & ~(rest & -rest));
        }
        if (minimal) out.push_back(s);
      }
    }
  }
  sort_canonical(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph random_chordal(int n, const Density& density, std::uint64_t seed) {
  Graph g = Graph::empty(n);
  Rng rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.below(i)]);
  }
  std::vector<Face> cliques;
  for (int v : order) {
    if (cliques.empty()) {
      cliques.push_back(vertex_bit(v));
      continue;
    }
    Face& host = cliques[rng.below(cliques.size())];
    Face attach = 0;
    for (int u : vertices_of(host)) {
      if (rng.bernoulli(density)) attach |= vertex_bit(u);
    }
    for (int u : vertices_of(attach)) g.add_edge(u, v);
    if (attach == host) {
      host |= vertex_bit(v);
    } else {
      cliques.push_back(attach | vertex_bit(v));
    }
  }
  return g;
}

}  // namespace facering
