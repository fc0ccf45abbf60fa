#include "facering/betti.hpp"

#include <algorithm>
#include <thread>

#include "facering/alexander.hpp"
#include "facering/errors.hpp"
#include "facering/homology.hpp"

namespace facering {

namespace {

/// β_{i,j} counts for subsets W in [begin, end), dense (n+1) x (n+1).
void accumulate(const SimplicialComplex& complex, FieldSpec field, Face begin, Face end,
                std::vector<std::uint64_t>& counts) {
  const auto width = static_cast<std::size_t>(complex.n() + 1);
  for (Face w = begin; w < end; ++w) {
    const int j = face_size(w);
    const auto ranks = reduced_homology_ranks_collapsed(complex.restriction(w), field);
    // ranks[k] = dim H̃_{k-1}(Δ|W) contributes to β_{j-k, j}.
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      if (ranks[k] == 0) continue;
      const auto i = static_cast<std::size_t>(j) - k;
      counts[i * width + static_cast<std::size_t>(j)] += ranks[k];
    }
  }
}

}  // namespace

GradedBettiTable hochster_betti(const SimplicialComplex& complex, FieldSpec field,
                                HochsterOptions options) {
  if (complex.is_void()) {
    throw PreconditionError("Betti numbers of the void complex are undefined");
  }
  const int n = complex.n();
  if (n > kMaxHochsterVertices) {
    throw ResourceLimitError("Hochster enumeration needs n <= " +
                             std::to_string(kMaxHochsterVertices) + ", got " +
                             std::to_string(n));
  }
  const Face subsets = Face{1} << n;
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (subsets < 4096) threads = 1;
  threads = std::clamp(threads, 1u, 64u);

  const auto width = static_cast<std::size_t>(n + 1);
  std::vector<std::vector<std::uint64_t>> partial(
      threads, std::vector<std::uint64_t>(width * width, 0));
  if (threads == 1) {
    accumulate(complex, field, 0, subsets, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    const Face chunk = (subsets + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const Face begin = std::min<Face>(subsets, chunk * t);
      const Face end = std::min<Face>(subsets, begin + chunk);
      pool.emplace_back([&, begin, end, t] {
        accumulate(complex, field, begin, end, partial[t]);
      });
    }
  }

  GradedBettiTable table(n, field);
  for (std::size_t i = 0; i < width; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      std::uint64_t sum = 0;
      for (const auto& part : partial) sum += part[i * width + j];
      table.add(static_cast<int>(i), static_cast<int>(j), sum);
    }
  }
  return table;
}

std::optional<int> ResolutionShape::start() const {
  if (degrees.empty()) return std::nullopt;
  return degrees.front();
}

ResolutionShape classify_resolution(const GradedBettiTable& table) {
  ResolutionShape shape;
  shape.projective_dimension = table.projective_dimension();
  for (const auto& [key, value] : table.entries()) {
    if (key.first == 0 && key.second != 0) return shape;
  }
  for (int i = 1; i <= shape.projective_dimension; ++i) {
    int degree = -1;
    for (const auto& [key, value] : table.entries()) {
      if (key.first != i) continue;
      if (degree != -1) return {ResolutionKind::not_pure, {}, shape.projective_dimension};
      degree = key.second;
    }
    if (degree == -1 || (!shape.degrees.empty() && degree <= shape.degrees.back())) {
      return {ResolutionKind::not_pure, {}, shape.projective_dimension};
    }
    shape.degrees.push_back(degree);
  }
  shape.kind = ResolutionKind::pure;
  if (!shape.degrees.empty()) {
    bool linear = true;
    for (std::size_t k = 0; k < shape.degrees.size(); ++k) {
      linear = linear && shape.degrees[k] == shape.degrees.front() + static_cast<int>(k);
    }
    if (linear) shape.kind = ResolutionKind::linear;
  }
  return shape;
}

bool reisner_cohen_macaulay(const SimplicialComplex& complex, FieldSpec field) {
  if (complex.is_void()) throw PreconditionError("Cohen–Macaulay test on the void complex");
  for (const auto& group : enumerate_faces(complex)) {
    for (Face f : group) {
      const SimplicialComplex link = complex.link(f);
      const int top = link.dimension();
      const auto ranks = reduced_homology_ranks_collapsed(link, field);
      // ranks[k] = dim H̃_{k-1}; everything below the top dimension must vanish.
      for (std::size_t k = 0; k < ranks.size() && static_cast<int>(k) <= top; ++k) {
        if (ranks[k] != 0) return false;
      }
    }
  }
  return true;
}

std::optional<bool> dual_linear_cohen_macaulay(const SimplicialComplex& complex,
                                               FieldSpec field) {
  if (complex.is_void()) throw PreconditionError("Cohen–Macaulay test on the void complex");
  if (complex.is_simplex()) return std::nullopt;
  const int codim = complex.n() - (complex.dimension() + 1);
  const auto shape = classify_resolution(hochster_betti(alexander_dual(complex), field));
  return shape.is_linear() && shape.start() == codim;
}

CohenMacaulayVerdict cohen_macaulay_criteria(const SimplicialComplex& complex,
                                             FieldSpec field) {
  return {reisner_cohen_macaulay(complex, field), dual_linear_cohen_macaulay(complex, field)};
}

bool is_cohen_macaulay(const SimplicialComplex& complex, FieldSpec field) {
  const auto verdict = cohen_macaulay_criteria(complex, field);
  if (!verdict.agree()) {
    throw InconsistencyError("Reisner's criterion and dual linearity disagree");
  }
  return verdict.reisner;
}

}  // namespace facering
