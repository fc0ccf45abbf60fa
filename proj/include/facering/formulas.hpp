#pragma once

#include <span>
#include <string>
#include <vector>

#include "facering/betti.hpp"
#include "facering/complex.hpp"
#include "facering/field.hpp"
#include "facering/graph.hpp"
#include "facering/integer.hpp"
#include "facering/report.hpp"

namespace facering {

// Betti numbers below are in "step" indexing: β_k is the rank of the k-th
// free module after R in 0 → ... → R(-d_0)^{β_0} → R → k[Δ] → 0, so
// β_k = total(k + 1) of a GradedBettiTable and p = P - 1.

/// Input of the h-vector Betti formula for a pure resolution.
struct PureBettiInput {
  HVector h;
  int n = 0;
  int d = 0;                 ///< dim Δ + 1
  std::vector<int> degrees;  ///< d_0 < ... < d_p, all positive
};

/// β_i = sum_{l=0}^{d_i} (-1)^(l+i+1) C(n-d, l) h_{d_i - l}.
/// Throws PreconditionError for nonpositive or non-increasing degrees.
std::vector<Integer> betti_from_h_pure(const PureBettiInput& in);

/// Degrees t, t+1, ..., t+p.
std::vector<Integer> betti_from_h_linear(const HVector& h, int n, int d, int t,
                                         int p);

/// sum_{l=0}^{s} (-1)^l h_{s-l} C(codim, l): the z^s coefficient of
/// (1-z)^codim h(z).
Integer vanishing_sum(const HVector& h, int codim, int s);

/// Degrees s >= 1 where vanishing_sum is nonzero. When k[Δ] has a pure
/// resolution these are exactly d_0 < ... < d_p.
std::vector<int> pure_degrees_from_h(const HVector& h, int codim);

/// β_k = total(k + 1) for k = 0..P-1.
std::vector<Integer> betti_sequence(const GradedBettiTable& table);

/// β_i >= C(P, i+1) for 0 <= i < P: the lower bound for the pure resolution
/// of k[Δ] of type (0, d_0, ..., d_p).
VerificationReport betti_inequality_check(std::span<const Integer> betti,
                                          int projective_dimension,
                                          const std::string& digest,
                                          const std::string& check = "betti-lower-bound");

struct MultiplicityIdentity {
  Integer lhs;  ///< (-1)^c c! e
  Integer rhs;  ///< sum_i (-1)^(i+1) β_i d_i^c
  Rational multiplicity_from_resolution;
  bool holds = false;
};

/// Evaluates (-1)^c c! e = sum_{i=0}^{p} (-1)^(i+1) β_i d_i^c with
/// c = codim > 0. The R term contributes 1 * 0^c = 0.
MultiplicityIdentity multiplicity_from_pure_resolution(
    std::span<const Integer> betti, std::span<const int> degrees, int codim,
    const Integer& multiplicity);

/// sum_{i>=1} β*_i t^(i-1) = sum_i h_i (t+1)^i for Cohen–Macaulay Δ, β* the
/// standard-indexed totals of k[Δ*]. Non-CM input gives a skip record; the
/// full simplex is recorded as a degenerate skip.
VerificationReport eagon_reiner_identity_check(const SimplicialComplex& complex,
                                               FieldSpec field);

/// h-vector formulas for the pure resolution of k[Δ] against the oracle:
/// Betti formula, vanishing sums and sign linkage, lower bounds, and the
/// multiplicity identity. Non-pure tables give a skip record.
VerificationReport pure_resolution_suite(const SimplicialComplex& complex,
                                         const GradedBettiTable& table,
                                         const std::string& digest);

/// Linear resolution of k[Δ*] for Cohen–Macaulay Δ, t = n - d, binomial base
/// k*. Throws PreconditionError when Δ is not Cohen–Macaulay.
VerificationReport cm_dual_suite(const SimplicialComplex& complex, FieldSpec field);

/// 2-linear resolution of the clique complex of a chordal graph. Throws
/// PreconditionError (naming a chordless cycle) for non-chordal input.
VerificationReport chordal_suite(const Graph& g, FieldSpec field);

/// Everything applicable to one complex: Hilbert-series consistency,
/// multiplicity, Alexander dual counts, the pure suite, Cohen–Macaulay
/// criteria and the dual suite.
VerificationReport verify_complex(const SimplicialComplex& complex, FieldSpec field);

/// verify_complex on the clique complex plus, if chordal, chordal_suite.
VerificationReport verify_graph(const Graph& g, FieldSpec field);

}  // namespace facering
