#pragma once

#include <functional>
#include <span>
#include <vector>

#include "facering/face.hpp"
#include "facering/integer.hpp"

namespace facering {

/// A simplicial complex on the explicit ground set [n], stored by its facets.
///
/// The void complex (no faces) has no facets. The irrelevant complex {∅}
/// has the single facet ∅. Vertices of [n] may be absent from every face, so
/// Alexander duals are representable on the same ground set.
class SimplicialComplex {
 public:
  /// Keeps the inclusion-maximal candidates in canonical order. An empty
  /// candidate list generates the void complex. Throws PreconditionError for
  /// n outside [1, 63] or candidates outside [n].
  static SimplicialComplex from_facets(int n, std::vector<Face> candidates);
  static SimplicialComplex from_vertex_lists(
      int n, const std::vector<std::vector<int>>& candidates);

  static SimplicialComplex void_complex(int n);
  static SimplicialComplex irrelevant(int n);
  /// The full simplex 2^[n].
  static SimplicialComplex simplex(int n);

  int n() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }
  bool is_simplex() const {
    return facets_.size() == 1 && facets_[0] == ground_face(n_);
  }

  /// Largest facet size minus one; -1 for {∅}. Throws for the void complex.
  int dimension() const;

  bool contains(Face f) const;
  /// Union of all faces.
  Face vertex_set() const;

  /// Δ|W: faces contained in W. Void stays void.
  SimplicialComplex restriction(Face w) const;
  /// lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}. Throws unless F is a face.
  SimplicialComplex link(Face f) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  SimplicialComplex(int n, std::vector<Face> facets)
      : n_(n), facets_(std::move(facets)) {}

  int n_ = 1;
  std::vector<Face> facets_;
};

/// f_{-1}, f_0, ..., f_{d-1} stored at entries[0..d].
struct FVector {
  std::vector<Integer> entries;

  /// dim + 1.
  int d() const { return static_cast<int>(entries.size()) - 1; }
  /// f_i for i >= -1; zero beyond the stored range.
  Integer f(int i) const;

  bool operator==(const FVector&) const = default;
};

/// h_0, ..., h_d.
struct HVector {
  std::vector<Integer> entries;

  int d() const { return static_cast<int>(entries.size()) - 1; }
  /// h_i; zero outside [0, d].
  Integer h(int i) const;

  bool operator==(const HVector&) const = default;
};

/// Faces grouped by dimension: group k holds the faces of size k, canonical
/// order. Cost is O(sum over facets of 2^|F|); throws ResourceLimitError past
/// 2^24 candidate subsets. The void complex yields no groups.
std::vector<std::vector<Face>> enumerate_faces(const SimplicialComplex& complex);

FVector f_vector(const SimplicialComplex& complex);

/// h_j = sum_{i<=j} (-1)^(j-i) C(d-i, j-i) f_{i-1}.
HVector h_from_f(const FVector& f);
/// f_{j-1} = sum_{i<=j} C(d-i, j-i) h_i.
FVector f_from_h(const HVector& h);

/// True when facet `index` is a leaf of the complex generated by `facets`:
/// it is the only facet, or some other facet G contains H ∩ F for every other
/// facet H.
bool is_leaf(std::span<const Face> facets, std::size_t index);

/// Replays a facet labeling: each F_i must be a leaf of <F_1..F_i>.
bool is_leaf_order(std::span<const Face> order);

struct QuasiForestResult {
  bool is_quasi_forest = false;
  /// A leaf order F_1..F_m when `is_quasi_forest`.
  std::vector<Face> leaf_order;
};

/// Greedy leaf removal first, then exhaustive backtracking with memoized
/// dead states. Throws PreconditionError for the void complex.
QuasiForestResult is_quasi_forest(const SimplicialComplex& complex);

struct QuasiForestSequence {
  /// c_0..c_d with sum_i f_{i-1} (x-1)^i = sum_i c_i x^i.
  std::vector<Integer> coefficients;
  /// sum_{i>=k} c_i for k = 1..d.
  std::vector<Integer> tail_sums;
};

QuasiForestSequence quasi_forest_sequence(const FVector& f);

/// Calls `visit` once for every nonvoid complex on [n] (every nonempty
/// down-set of 2^[n]). Feasible up to n = 5 (7580 complexes).
void for_each_complex(int n,
                      const std::function<void(const SimplicialComplex&)>& visit);

}  // namespace facering
