#include "facering/field.hpp"

#include "facering/errors.hpp"

namespace facering {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw PreconditionError("field characteristic " + std::to_string(p) +
                            " is not a prime below 2^31");
  }
  return FieldSpec{p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    throw PreconditionError("unrecognized field '" + text + "'");
  }
  if (used != text.size() || value >= (1ul << 31)) {
    throw PreconditionError("unrecognized field '" + text + "'");
  }
  return prime(static_cast<std::uint32_t>(value));
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "rationals" : "prime " + std::to_string(characteristic_);
}

}  // namespace facering
