#include "facering/hilbert.hpp"

#include <sstream>

#include "facering/errors.hpp"

namespace facering {

namespace {

void trim(std::vector<Integer>& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

/// C(x, r) for any integer x: x(x-1)...(x-r+1) / r!.
Integer falling_binomial(const Integer& x, int r) {
  Integer product = 1;
  for (int k = 0; k < r; ++k) product *= x - k;
  Integer out;
  mpz_divexact(out.get_mpz_t(), product.get_mpz_t(),
               factorial(static_cast<unsigned long>(r)).get_mpz_t());
  return out;
}

}  // namespace

Integer HilbertSeries::numerator_at_one() const {
  Integer sum = 0;
  for (const auto& c : numerator) sum += c;
  return sum;
}

Integer HilbertSeries::coefficient(int s) const {
  if (s < 0) return 0;
  const int d = denominator_exponent;
  Integer sum = 0;
  for (std::size_t k = 0; k < numerator.size() && static_cast<int>(k) <= s; ++k) {
    const int rest = s - static_cast<int>(k);
    sum += d == 0 ? Integer(rest == 0 ? 1 : 0) * numerator[k]
                  : numerator[k] * binomial(rest + d - 1, d - 1);
  }
  return sum;
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    const Integer& c = numerator[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 'z';
      if (k > 1) os << '^' << k;
    }
  }
  if (first) os << '0';
  os << ") / (1-z)^" << denominator_exponent;
  return os.str();
}

HilbertSeries series_from_complex(const SimplicialComplex& complex) {
  if (complex.is_void()) {
    throw PreconditionError("the void complex has no face ring");
  }
  const HVector h = h_from_f(f_vector(complex));
  HilbertSeries out{h.entries, h.d()};
  trim(out.numerator);
  return out;
}

HilbertSeries series_from_resolution(const GradedBettiTable& table) {
  std::vector<Integer> poly;
  for (const auto& [key, value] : table.entries()) {
    const auto [i, j] = key;
    if (poly.size() <= static_cast<std::size_t>(j)) poly.resize(static_cast<std::size_t>(j) + 1);
    Integer v(static_cast<unsigned long>(value));
    if (i % 2) poly[static_cast<std::size_t>(j)] -= v; else poly[static_cast<std::size_t>(j)] += v;
  }
  trim(poly);
  HilbertSeries out{std::move(poly), table.n()};
  while (!out.numerator.empty() && out.denominator_exponent > 0 &&
         out.numerator_at_one() == 0) {
    // P = (1-z) Q  =>  Q_k = P_0 + ... + P_k.
    Integer running = 0;
    for (auto& c : out.numerator) {
      running += c;
      c = running;
    }
    trim(out.numerator);
    --out.denominator_exponent;
  }
  return out;
}

Integer multiplicity(const SimplicialComplex& complex) {
  if (complex.is_void()) throw PreconditionError("the void complex has no face ring");
  return f_vector(complex).entries.back();
}

std::vector<Integer> hilbert_polynomial_binomial_coefficients(
    const HilbertSeries& series) {
  const int d = series.denominator_exponent;
  if (d == 0) return {};
  // HP(s) = sum_k P_k C(s-k+d-1, d-1) as a polynomial in s, sampled at
  // s = 0..d-1; the forward differences at 0 are the binomial-basis
  // coefficients.
  std::vector<Integer> values;
  for (int s = 0; s < d; ++s) {
    Integer v = 0;
    for (std::size_t k = 0; k < series.numerator.size(); ++k) {
      v += series.numerator[k] *
           falling_binomial(Integer(s - static_cast<int>(k) + d - 1), d - 1);
    }
    values.push_back(v);
  }
  std::vector<Integer> by_degree;  // coefficient of C(s, r), r = 0..d-1
  for (int r = 0; r < d; ++r) {
    by_degree.push_back(values.front());
    for (std::size_t k = 0; k + 1 < values.size(); ++k) values[k] = values[k + 1] - values[k];
    values.pop_back();
  }
  return {by_degree.rbegin(), by_degree.rend()};
}

}  // namespace facering
