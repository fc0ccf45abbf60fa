#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "facering/complex.hpp"

namespace facering {

/// A probability num/den in [0, 1].
struct Density {
  std::uint64_t num = 1;
  std::uint64_t den = 2;

  /// Accepts "p/q", a decimal such as "0.4", or "0"/"1".
  static Density parse(const std::string& text);
  std::string to_string() const;
};

/// Seeded generator with portable bounded draws (the standard distributions
/// are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(const Density& p);
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Between 1 and max_facets random candidate facets, each vertex kept with
/// probability 1/2.
SimplicialComplex random_complex(int n, Rng& rng, int max_facets);

/// Grows a quasi-forest by leaf gluing: each new facet meets the union of the
/// earlier facets inside a proper subset of one of them and brings at least
/// one fresh vertex.
SimplicialComplex random_quasi_forest(int n, Rng& rng);

}  // namespace facering
