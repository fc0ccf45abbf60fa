#include "facering/complex.hpp"

#include <algorithm>
#include <set>

#include "facering/errors.hpp"

namespace facering {

namespace {

void check_ground_set(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw PreconditionError("ground set size " + std::to_string(n) +
                            " outside [1," + std::to_string(kMaxVertices) + "]");
  }
}

constexpr std::uint64_t kMaxEnumeratedSubsets = std::uint64_t{1} << 24;

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<Face> candidates) {
  check_ground_set(n);
  const Face ground = ground_face(n);
  for (Face f : candidates) {
    if (!is_subset(f, ground)) {
      throw PreconditionError("facet " + face_to_string(f) + " outside [1," +
                              std::to_string(n) + "]");
    }
  }
  return SimplicialComplex(n, maximal_faces(std::move(candidates)));
}

SimplicialComplex SimplicialComplex::from_vertex_lists(
    int n, const std::vector<std::vector<int>>& candidates) {
  check_ground_set(n);
  std::vector<Face> faces;
  faces.reserve(candidates.size());
  for (const auto& list : candidates) faces.push_back(face_from_vertices(list, n));
  return from_facets(n, std::move(faces));
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
  check_ground_set(n);
  return SimplicialComplex(n, {});
}

SimplicialComplex SimplicialComplex::irrelevant(int n) {
  check_ground_set(n);
  return SimplicialComplex(n, {Face{0}});
}

SimplicialComplex SimplicialComplex::simplex(int n) {
  check_ground_set(n);
  return SimplicialComplex(n, {ground_face(n)});
}

int SimplicialComplex::dimension() const {
  if (is_void()) throw PreconditionError("the void complex has no dimension");
  // Canonical order puts the largest facets last.
  return face_size(facets_.back()) - 1;
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [f](Face g) { return is_subset(f, g); });
}

Face SimplicialComplex::vertex_set() const {
  Face out = 0;
  for (Face f : facets_) out |= f;
  return out;
}

SimplicialComplex SimplicialComplex::restriction(Face w) const {
  std::vector<Face> cut;
  cut.reserve(facets_.size());
  for (Face f : facets_) cut.push_back(f & w);
  return SimplicialComplex(n_, maximal_faces(std::move(cut)));
}

SimplicialComplex SimplicialComplex::link(Face f) const {
  if (!contains(f)) {
    throw PreconditionError("link of a non-face " + face_to_string(f));
  }
  std::vector<Face> star;
  for (Face g : facets_) {
    if (is_subset(f, g)) star.push_back(g & ~f);
  }
  return SimplicialComplex(n_, maximal_faces(std::move(star)));
}

Integer FVector::f(int i) const {
  const int k = i + 1;
  if (k < 0 || k >= static_cast<int>(entries.size())) return 0;
  return entries[static_cast<std::size_t>(k)];
}

Integer HVector::h(int i) const {
  if (i < 0 || i >= static_cast<int>(entries.size())) return 0;
  return entries[static_cast<std::size_t>(i)];
}

std::vector<std::vector<Face>> enumerate_faces(const SimplicialComplex& complex) {
  if (complex.is_void()) return {};
  std::uint64_t budget = 0;
  for (Face f : complex.facets()) {
    budget += std::uint64_t{1} << face_size(f);
    if (face_size(f) >= 63 || budget > kMaxEnumeratedSubsets) {
      throw ResourceLimitError("face enumeration exceeds 2^24 subsets");
    }
  }
  std::vector<Face> all;
  all.reserve(budget);
  for (Face f : complex.facets()) {
    for (Face s = f;; s = (s - 1) & f) {
      all.push_back(s);
      if (s == 0) break;
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<std::vector<Face>> groups(
      static_cast<std::size_t>(complex.dimension() + 2));
  for (Face f : all) groups[static_cast<std::size_t>(face_size(f))].push_back(f);
  for (auto& g : groups) sort_canonical(g);
  return groups;
}

FVector f_vector(const SimplicialComplex& complex) {
  if (complex.is_void()) return FVector{{Integer(0)}};
  FVector out;
  for (const auto& group : enumerate_faces(complex)) {
    out.entries.emplace_back(static_cast<unsigned long>(group.size()));
  }
  return out;
}

HVector h_from_f(const FVector& f) {
  const int d = f.d();
  HVector out;
  out.entries.resize(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) {
    Integer sum = 0;
    for (int i = 0; i <= j; ++i) {
      Integer term = binomial(d - i, j - i) * f.f(i - 1);
      if ((j - i) % 2) sum -= term; else sum += term;
    }
    out.entries[static_cast<std::size_t>(j)] = sum;
  }
  return out;
}

FVector f_from_h(const HVector& h) {
  const int d = h.d();
  FVector out;
  out.entries.resize(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) {
    Integer sum = 0;
    for (int i = 0; i <= j; ++i) sum += binomial(d - i, j - i) * h.h(i);
    out.entries[static_cast<std::size_t>(j)] = sum;
  }
  return out;
}

bool is_leaf(std::span<const Face> facets, std::size_t index) {
  if (facets.size() == 1) return true;
  const Face f = facets[index];
  Face touched = 0;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    if (k != index) touched |= facets[k] & f;
  }
  for (std::size_t k = 0; k < facets.size(); ++k) {
    if (k != index && is_subset(touched, facets[k])) return true;
  }
  return false;
}

bool is_leaf_order(std::span<const Face> order) {
  if (order.empty()) return false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!is_leaf(order.first(i + 1), i)) return false;
  }
  return true;
}

namespace {

class LeafOrderSearch {
 public:
  explicit LeafOrderSearch(const std::vector<Face>& facets)
      : facets_(facets), alive_(facets.size(), true) {}

  /// Fills `removed` with facets in removal order (the reverse of a leaf
  /// order) when the remaining facets can be dismantled.
  bool greedy(std::vector<Face>& removed) {
    std::vector<Face> current = facets_;
    while (current.size() > 1) {
      bool progressed = false;
      for (std::size_t k = current.size(); k-- > 0;) {
        if (is_leaf(current, k)) {
          removed.push_back(current[k]);
          current.erase(current.begin() + static_cast<std::ptrdiff_t>(k));
          progressed = true;
          break;
        }
      }
      if (!progressed) return false;
    }
    removed.push_back(current.front());
    return true;
  }

  bool search(std::vector<Face>& removed, std::size_t remaining) {
    std::vector<Face> current;
    std::vector<std::size_t> index;
    for (std::size_t k = 0; k < facets_.size(); ++k) {
      if (alive_[k]) {
        current.push_back(facets_[k]);
        index.push_back(k);
      }
    }
    if (remaining == 1) {
      removed.push_back(current.front());
      return true;
    }
    if (dead_.count(alive_)) return false;
    for (std::size_t k = current.size(); k-- > 0;) {
      if (!is_leaf(current, k)) continue;
      alive_[index[k]] = false;
      removed.push_back(current[k]);
      if (search(removed, remaining - 1)) return true;
      removed.pop_back();
      alive_[index[k]] = true;
    }
    dead_.insert(alive_);
    return false;
  }

 private:
  const std::vector<Face>& facets_;
  std::vector<bool> alive_;
  std::set<std::vector<bool>> dead_;
};

}  // namespace

QuasiForestResult is_quasi_forest(const SimplicialComplex& complex) {
  if (complex.is_void()) {
    throw PreconditionError("quasi-forest test needs a nonvoid complex");
  }
  LeafOrderSearch search(complex.facets());
  std::vector<Face> removed;
  bool found = search.greedy(removed);
  if (!found) {
    removed.clear();
    found = search.search(removed, complex.facets().size());
  }
  QuasiForestResult out;
  out.is_quasi_forest = found;
  if (found) out.leaf_order.assign(removed.rbegin(), removed.rend());
  return out;
}

QuasiForestSequence quasi_forest_sequence(const FVector& f) {
  const int d = f.d();
  QuasiForestSequence out;
  out.coefficients.assign(static_cast<std::size_t>(d + 1), Integer(0));
  for (int i = 0; i <= d; ++i) {
    // f_{i-1} (x-1)^i = f_{i-1} sum_k C(i,k) x^k (-1)^(i-k)
    for (int k = 0; k <= i; ++k) {
      Integer term = f.f(i - 1) * binomial(i, k);
      if ((i - k) % 2) out.coefficients[k] -= term; else out.coefficients[k] += term;
    }
  }
  Integer tail = 0;
  out.tail_sums.assign(static_cast<std::size_t>(std::max(d, 0)), Integer(0));
  for (int k = d; k >= 1; --k) {
    tail += out.coefficients[static_cast<std::size_t>(k)];
    out.tail_sums[static_cast<std::size_t>(k - 1)] = tail;
  }
  return out;
}

void for_each_complex(int n,
                      const std::function<void(const SimplicialComplex&)>& visit) {
  check_ground_set(n);
  if (n > 6) throw ResourceLimitError("exhaustive enumeration limited to n <= 6");
  // Subsets of [n] in a linear extension of inclusion; a subset may join only
  // when all of its codimension-one subsets already have.
  std::vector<Face> order;
  for (Face s = 0; s <= ground_face(n); ++s) order.push_back(s);
  sort_canonical(order);
  std::vector<bool> in(order.size() > 0 ? (std::size_t{1} << n) : 0, false);

  std::vector<Face> members;
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      if (!members.empty()) visit(SimplicialComplex::from_facets(n, members));
      return;
    }
    const Face s = order[k];
    bool allowed = true;
    for (Face rest = s; rest; rest &= rest - 1) {
      const Face below = s & ~(rest & -rest);
      if (!in[below]) {
        allowed = false;
        break;
      }
    }
    if (allowed) {
      in[s] = true;
      members.push_back(s);
      self(self, k + 1);
      members.pop_back();
      in[s] = false;
    }
    self(self, k + 1);
  };
  recurse(recurse, 0);
}

}  // namespace facering
