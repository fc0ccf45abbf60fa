#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "facering/field.hpp"

namespace facering {

/// Graded Betti numbers β_{i,j} of k[Δ] = R/I_Δ in standard indexing:
/// β_{0,0} = 1 counts the generator of the module itself, β_{1,j} the
/// minimal generators of I_Δ of degree j, and so on.
///
/// A resolution written with R kept separate (R(-d_0)^{β'_0} → R → k[Δ])
/// has β'_k = total(k + 1); `betti_sequence` in formulas.hpp is the
/// single place that conversion happens.
class GradedBettiTable {
 public:
  GradedBettiTable() = default;
  GradedBettiTable(int n, FieldSpec field) : n_(n), field_(field) {}

  void add(int i, int j, std::uint64_t value);
  std::uint64_t at(int i, int j) const;
  std::uint64_t total(int i) const;
  /// max{i : some β_{i,j} != 0}.
  int projective_dimension() const;

  /// Nonzero entries keyed by (i, j).
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const {
    return entries_;
  }
  int n() const { return n_; }
  FieldSpec field() const { return field_; }

  /// Conventional Betti diagram: columns i, rows j - i, '.' for zero.
  std::string diagram() const;

  bool operator==(const GradedBettiTable&) const = default;

 private:
  int n_ = 0;
  FieldSpec field_;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

}  // namespace facering
