#pragma once

#include <cstdint>

namespace cohsys {

/// Residue of the prime field F_q, always kept in [0, q).
using Residue = std::uint32_t;

/// Arithmetic context for F_q. The modulus is validated once at construction;
/// elements are plain residues, so every operation goes through the context.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultModulus = 101;
  static constexpr std::uint32_t kMaxModulus = (1u << 31) - 1;

  /// Throws std::invalid_argument unless modulus is a prime below 2^31.
  explicit PrimeField(std::uint32_t modulus = kDefaultModulus);

  std::uint32_t modulus() const noexcept { return q_; }

  Residue reduce(std::int64_t v) const noexcept {
    const std::int64_t q = q_;
    std::int64_t r = v % q;
    return static_cast<Residue>(r < 0 ? r + q : r);
  }
  Residue add(Residue a, Residue b) const noexcept {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % q_);
  }
  Residue pow(Residue base, std::uint64_t exp) const noexcept;
  /// Throws std::domain_error on zero.
  Residue inv(Residue a) const;

  /// Signed representative in (-q/2, q/2], for printing.
  std::int64_t centered(Residue a) const noexcept {
    return a > q_ / 2 ? static_cast<std::int64_t>(a) - q_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint64_t v) noexcept;

}  // namespace cohsys
