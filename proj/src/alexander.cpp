#include "facering/alexander.hpp"

#include "facering/graph.hpp"

namespace facering {

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
  const int n = complex.n();
  if (complex.is_void()) return SimplicialComplex::simplex(n);
  const auto nonfaces = minimal_nonfaces(complex);
  if (nonfaces.empty()) return SimplicialComplex::void_complex(n);
  std::vector<Face> facets;
  facets.reserve(nonfaces.size());
  for (Face s : nonfaces) facets.push_back(ground_face(n) & ~s);
  return SimplicialComplex::from_facets(n, std::move(facets));
}

FVector dual_f_vector(const FVector& f, int n) {
  FVector out;
  // A (n-i-1)-subset has dimension n-i-2.
  for (int i = -1; i <= n - 1; ++i) {
    out.entries.push_back(binomial(n, i + 1) - f.f(n - i - 2));
  }
  while (out.entries.size() > 1 && out.entries.back() == 0) out.entries.pop_back();
  return out;
}

std::optional<int> k_star(const FVector& f, int n) {
  for (int k = 0; k <= n; ++k) {
    if (binomial(n, k) != f.f(k - 1)) return k;
  }
  return std::nullopt;
}

}  // namespace facering
