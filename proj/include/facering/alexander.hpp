#pragma once

#include <optional>

#include "facering/complex.hpp"

namespace facering {

/// W ∈ Δ* iff [n]∖W ∉ Δ. Facets of Δ* are the complements of the minimal
/// non-faces of Δ. The dual of the void complex is the full simplex and
/// vice versa.
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

/// f*_i = C(n, i+1) - f_{n-i-2}, trailing zeros trimmed; all-zero (the void
/// complex) is returned as the single entry 0.
FVector dual_f_vector(const FVector& f, int n);

/// Smallest k with C(n, k) != f_{k-1}; nullopt for the full simplex. With
/// this k, dim k[Δ*] = n - k. Nonvoid complexes give k >= 1; the void
/// f-vector gives 0.
std::optional<int> k_star(const FVector& f, int n);

}  // namespace facering
