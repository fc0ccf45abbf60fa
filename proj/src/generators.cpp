#include "facering/generators.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "facering/errors.hpp"

namespace facering {

Density Density::parse(const std::string& text) {
  auto fail = [&]() -> Density {
    throw PreconditionError("density '" + text + "' is not a rational in [0,1]");
  };
  auto digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
  };
  Density out;
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const std::string a = text.substr(0, slash);
    const std::string b = text.substr(slash + 1);
    if (!digits(a) || !digits(b) || a.size() > 18 || b.size() > 18) return fail();
    out.num = std::stoull(a);
    out.den = std::stoull(b);
  } else if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string a = text.substr(0, dot);
    const std::string b = text.substr(dot + 1);
    if ((!a.empty() && !digits(a)) || !digits(b) || b.size() > 17 || a.size() > 1) {
      return fail();
    }
    out.den = 1;
    for (std::size_t i = 0; i < b.size(); ++i) out.den *= 10;
    out.num = (a.empty() ? 0 : std::stoull(a)) * out.den + std::stoull(b);
  } else {
    if (!digits(text) || text.size() > 18) return fail();
    out.num = std::stoull(text);
    out.den = 1;
  }
  if (out.den == 0 || out.num > out.den) return fail();
  const std::uint64_t g = std::gcd(out.num, out.den);
  out.num /= g;
  out.den /= g;
  return out;
}

std::string Density::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t span = ~std::uint64_t{0};
  const std::uint64_t limit = span - span % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

bool Rng::bernoulli(const Density& p) {
  if (p.num == 0) return false;
  if (p.num >= p.den) return true;
  return below(p.den) < p.num;
}

SimplicialComplex random_complex(int n, Rng& rng, int max_facets) {
  const auto count = 1 + rng.below(static_cast<std::uint64_t>(std::max(max_facets, 1)));
  std::vector<Face> candidates;
  for (std::uint64_t k = 0; k < count; ++k) {
    candidates.push_back(rng.bits() & ground_face(n));
  }
  return SimplicialComplex::from_facets(n, std::move(candidates));
}

SimplicialComplex random_quasi_forest(int n, Rng& rng) {
  std::vector<int> fresh(static_cast<std::size_t>(n));
  std::iota(fresh.begin(), fresh.end(), 1);
  for (std::size_t i = fresh.size(); i > 1; --i) {
    std::swap(fresh[i - 1], fresh[rng.below(i)]);
  }
  auto take_fresh = [&](std::uint64_t limit) {
    const std::uint64_t k = 1 + rng.below(std::min<std::uint64_t>(limit, fresh.size()));
    Face f = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
      f |= vertex_bit(fresh.back());
      fresh.pop_back();
    }
    return f;
  };

  std::vector<Face> facets{take_fresh(4)};
  while (!fresh.empty()) {
    const Face branch = facets[rng.below(facets.size())];
    Face shared = branch & rng.bits();
    if (shared == branch) {
      const auto drop = vertices_of(branch)[rng.below(static_cast<std::uint64_t>(face_size(branch)))];
      shared &= ~vertex_bit(drop);
    }
    facets.push_back(shared | take_fresh(3));
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

}  // namespace facering
