#include "facering/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "facering/errors.hpp"

namespace facering {

std::size_t rank_bareiss(const IntMatrix& m) {
  std::vector<std::vector<Integer>> a(m.rows, std::vector<Integer>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = static_cast<long>(m(r, c));
  }
  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    const Integer& p = a[rank][c];
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      for (std::size_t k = c + 1; k < m.cols; ++k) {
        Integer v = p * a[r][k] - a[r][c] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      a[r][c] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(IntMatrix m) {
  const IntMatrix original = m;
  std::vector<bool> used(m.rows, false);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols; ++c) {
    std::size_t pivot = m.rows;
    bool nonzero = false;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (used[r] || m(r, c) == 0) continue;
      nonzero = true;
      if (m(r, c) == 1 || m(r, c) == -1) {
        pivot = r;
        break;
      }
    }
    if (!nonzero) continue;
    if (pivot == m.rows) {
      // No unit pivot left: finish the untouched block exactly.
      std::vector<std::size_t> rest;
      for (std::size_t r = 0; r < m.rows; ++r) {
        if (!used[r]) rest.push_back(r);
      }
      IntMatrix block(rest.size(), m.cols - c);
      for (std::size_t r = 0; r < rest.size(); ++r) {
        for (std::size_t k = c; k < m.cols; ++k) block(r, k - c) = m(rest[r], k);
      }
      return rank + rank_bareiss(block);
    }
    used[pivot] = true;
    ++rank;
    const std::int64_t unit = m(pivot, c);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (used[r] || m(r, c) == 0) continue;
      const std::int64_t factor = m(r, c) * unit;
      for (std::size_t k = c; k < m.cols; ++k) {
        if (m(pivot, k) == 0) continue;
        std::int64_t scaled = 0;
        std::int64_t next = 0;
        if (__builtin_mul_overflow(factor, m(pivot, k), &scaled) ||
            __builtin_sub_overflow(m(r, k), scaled, &next)) {
          return rank_bareiss(original);
        }
        m(r, k) = next;
      }
    }
  }
  return rank;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  const auto mod = static_cast<std::int64_t>(p);
  std::vector<std::vector<std::uint64_t>> a(m.rows, std::vector<std::uint64_t>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      a[r][c] = static_cast<std::uint64_t>(((m(r, c) % mod) + mod) % mod);
    }
  }
  auto inverse = [p](std::uint64_t x) {
    std::uint64_t result = 1;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) result = result * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = inverse(a[rank][c]);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t factor = a[r][c] * inv % p;
      for (std::size_t k = c; k < m.cols; ++k) {
        a[r][k] = (a[r][k] + (p - factor) * a[rank][k]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(const IntMatrix& m, FieldSpec field) {
  return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

IntMatrix boundary_matrix(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  std::unordered_map<Face, std::size_t> row_of;
  row_of.reserve(lower.size());
  for (std::size_t r = 0; r < lower.size(); ++r) row_of.emplace(lower[r], r);
  IntMatrix out(lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    std::int64_t sign = 1;
    for (Face rest = upper[c]; rest; rest &= rest - 1) {
      const Face facet = upper[c] & ~(rest & -rest);
      out(row_of.at(facet), c) = sign;
      sign = -sign;
    }
  }
  return out;
}

std::vector<std::uint64_t> reduced_homology_ranks(const SimplicialComplex& complex,
                                                  FieldSpec field) {
  if (complex.is_void()) return {};
  const auto groups = enumerate_faces(complex);
  const std::size_t top = groups.size();  // group k: faces of size k
  // boundary_rank[k] = rank of the map from size-k faces to size-(k-1) faces.
  std::vector<std::size_t> boundary_rank(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) {
    boundary_rank[k] = rank(boundary_matrix(groups[k - 1], groups[k]), field);
  }
  std::vector<std::uint64_t> out(top);
  for (std::size_t k = 0; k < top; ++k) {
    out[k] = groups[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  }
  return out;
}

std::uint64_t reduced_homology_rank(const SimplicialComplex& complex, int i,
                                    FieldSpec field) {
  const auto ranks = reduced_homology_ranks(complex, field);
  const int k = i + 1;
  if (k < 0 || k >= static_cast<int>(ranks.size())) return 0;
  return ranks[static_cast<std::size_t>(k)];
}

SimplicialComplex strong_collapse(const SimplicialComplex& complex) {
  std::vector<Face> facets = complex.facets();
  bool changed = true;
  while (changed && facets.size() > 1) {
    changed = false;
    Face vertices = 0;
    for (Face f : facets) vertices |= f;
    for (Face rest = vertices; rest; rest &= rest - 1) {
      const Face v = rest & -rest;
      Face common = ~Face{0};
      for (Face f : facets) {
        if (f & v) common &= f;
      }
      if (common & ~v) {
        for (Face& f : facets) f &= ~v;
        facets = maximal_faces(std::move(facets));
        changed = true;
        break;
      }
    }
  }
  return SimplicialComplex::from_facets(complex.n(), std::move(facets));
}

std::vector<std::uint64_t> reduced_homology_ranks_collapsed(
    const SimplicialComplex& complex, FieldSpec field) {
  if (complex.is_void()) return {};
  const SimplicialComplex core = strong_collapse(complex);
  if (core.facets().size() == 1 && core.facets().front() != 0) return {};
  return reduced_homology_ranks(core, field);
}

}  // namespace facering
