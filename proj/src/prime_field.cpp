#include "cohsys/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace cohsys {

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t p = 3; p * p <= v; p += 2) {
    if (v % p == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : q_(modulus) {
  if (modulus > kMaxModulus || !is_prime(modulus)) {
    throw std::invalid_argument("modulus " + std::to_string(modulus) + " is not a prime below 2^31");
  }
}

Residue PrimeField::pow(Residue base, std::uint64_t exp) const noexcept {
  Residue result = 1 % q_;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % q_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  return pow(a, q_ - 2);
}

}  // namespace cohsys
