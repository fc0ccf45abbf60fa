#pragma once

#include <string>
#include <vector>

#include "facering/betti_table.hpp"
#include "facering/complex.hpp"
#include "facering/integer.hpp"

namespace facering {

/// P(z) / (1-z)^d with integer coefficients.
struct HilbertSeries {
  /// Low degree first, trailing zeros trimmed.
  std::vector<Integer> numerator;
  int denominator_exponent = 0;

  Integer numerator_at_one() const;
  /// Coefficient of z^s in the power series expansion.
  Integer coefficient(int s) const;
  /// "(c0 + c1*z + ...) / (1-z)^d".
  std::string to_string() const;

  bool operator==(const HilbertSeries&) const = default;
};

/// Numerator h(Δ), exponent dim Δ + 1. Throws for the void complex.
HilbertSeries series_from_complex(const SimplicialComplex& complex);

/// sum (-1)^i β_{i,j} z^j over (1-z)^n, with (1-z) cancelled while the
/// numerator vanishes at 1.
HilbertSeries series_from_resolution(const GradedBettiTable& table);

/// e(k[Δ]) = f_{d-1}. Throws for the void complex.
Integer multiplicity(const SimplicialComplex& complex);

/// Coefficients (m_0, ..., m_{d-1}) of the Hilbert polynomial in the basis
/// C(s, d-1), ..., C(s, 0). m_0 is the multiplicity. Empty when d = 0.
std::vector<Integer> hilbert_polynomial_binomial_coefficients(
    const HilbertSeries& series);

}  // namespace facering
