#pragma once

#include <cstdint>
#include <string>

namespace facering {

/// Coefficient field for homology: the rationals, or GF(p).
class FieldSpec {
 public:
  constexpr FieldSpec() = default;

  static constexpr FieldSpec rationals() { return FieldSpec{}; }
  /// Throws PreconditionError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "q", "Q", "rationals", or a prime.
  static FieldSpec parse(const std::string& text);

  bool is_rational() const { return characteristic_ == 0; }
  std::uint32_t characteristic() const { return characteristic_; }
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  explicit constexpr FieldSpec(std::uint32_t p) : characteristic_(p) {}
  std::uint32_t characteristic_ = 0;
};

}  // namespace facering
