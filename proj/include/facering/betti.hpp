#pragma once

#include <optional>
#include <vector>

#include "facering/betti_table.hpp"
#include "facering/complex.hpp"
#include "facering/field.hpp"

namespace facering {

/// Largest ground set hochster_betti accepts (2^n induced subcomplexes).
inline constexpr int kMaxHochsterVertices = 22;

struct HochsterOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// β_{i,j}(k[Δ]) = sum over |W| = j of dim H̃_{j-i-1}(Δ|W). Subsets may be
/// processed on several threads; the merged table does not depend on the
/// schedule. Throws PreconditionError for the void complex and
/// ResourceLimitError for n > kMaxHochsterVertices.
GradedBettiTable hochster_betti(const SimplicialComplex& complex, FieldSpec field,
                                HochsterOptions options = {});

enum class ResolutionKind { not_pure, pure, linear };

struct ResolutionShape {
  ResolutionKind kind = ResolutionKind::not_pure;
  /// d_0 < ... < d_p: degree of the single shift at standard step k + 1.
  /// Empty for the zero ideal.
  std::vector<int> degrees;
  /// Standard projective dimension P.
  int projective_dimension = 0;

  bool is_pure() const { return kind != ResolutionKind::not_pure; }
  bool is_linear() const { return kind == ResolutionKind::linear; }
  bool is_zero_ideal() const { return projective_dimension == 0; }
  /// p = P - 1; -1 for the zero ideal.
  int steps() const { return projective_dimension - 1; }
  /// d_0 for a nonzero ideal.
  std::optional<int> start() const;
};

ResolutionShape classify_resolution(const GradedBettiTable& table);

/// Reisner: H̃_i(lk F) = 0 for every face F and i < dim lk F.
bool reisner_cohen_macaulay(const SimplicialComplex& complex, FieldSpec field);

/// Eagon–Reiner: the Alexander dual's ideal has an (n-d)-linear resolution.
/// nullopt for the full simplex, whose dual is void.
std::optional<bool> dual_linear_cohen_macaulay(const SimplicialComplex& complex,
                                               FieldSpec field);

struct CohenMacaulayVerdict {
  bool reisner = false;
  std::optional<bool> dual_linear;

  bool agree() const { return !dual_linear || *dual_linear == reisner; }
};

CohenMacaulayVerdict cohen_macaulay_criteria(const SimplicialComplex& complex,
                                             FieldSpec field);

/// Reisner's answer; throws InconsistencyError if the dual-linearity
/// criterion disagrees.
bool is_cohen_macaulay(const SimplicialComplex& complex, FieldSpec field);

}  // namespace facering
