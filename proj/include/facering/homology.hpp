#pragma once

#include <cstdint>
#include <vector>

#include "facering/complex.hpp"
#include "facering/field.hpp"

namespace facering {

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
};

/// Rank over Q. Eliminates on unit pivots in machine integers; whatever is
/// left (no unit pivot, or an overflow) goes through fraction-free Bareiss
/// elimination over GMP integers.
std::size_t rank_rational(IntMatrix m);

/// Fraction-free Bareiss rank over GMP integers.
std::size_t rank_bareiss(const IntMatrix& m);

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);

std::size_t rank(const IntMatrix& m, FieldSpec field);

/// Boundary map from k-faces to (k-1)-faces (k >= 0; the (-1)-face is ∅),
/// rows and columns in canonical face order.
IntMatrix boundary_matrix(const std::vector<Face>& lower,
                          const std::vector<Face>& upper);

/// ranks[k] = dim H̃_{k-1}(Δ; field) for k = 0..dim+1. Empty for the void
/// complex, which has no reduced homology.
std::vector<std::uint64_t> reduced_homology_ranks(const SimplicialComplex& complex,
                                                  FieldSpec field);

/// dim H̃_i(Δ; field) for -1 <= i <= dim Δ. Zero for the void complex.
std::uint64_t reduced_homology_rank(const SimplicialComplex& complex, int i,
                                    FieldSpec field);

/// Repeatedly deletes a vertex v dominated by another vertex u (every facet
/// containing v contains u). The link of v is then a cone on u, so the result
/// is homotopy equivalent to the input.
SimplicialComplex strong_collapse(const SimplicialComplex& complex);

/// reduced_homology_ranks after strong_collapse; a single nonempty facet
/// short-circuits to zero. Entries past the collapsed dimension are omitted
/// (they are zero).
std::vector<std::uint64_t> reduced_homology_ranks_collapsed(
    const SimplicialComplex& complex, FieldSpec field);

}  // namespace facering
