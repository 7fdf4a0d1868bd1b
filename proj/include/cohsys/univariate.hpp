#pragma once

#include <vector>

#include "cohsys/prime_field.hpp"

// Dense univariate polynomials over F_q, coefficient of t^i at index i.
// Every function returns trimmed polynomials (no trailing zeros); the zero
// polynomial is the empty vector.
namespace cohsys::upoly {

using Poly = std::vector<Residue>;

void trim(Poly& p);
inline bool is_zero(const Poly& p) { return p.empty(); }
/// -1 for the zero polynomial.
inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const PrimeField& F, const Poly& a, const Poly& b);
Poly sub(const PrimeField& F, const Poly& a, const Poly& b);
Poly mul(const PrimeField& F, const Poly& a, const Poly& b);
Poly scale(const PrimeField& F, const Poly& a, Residue c);

struct DivMod {
  Poly quotient;
  Poly remainder;
};
/// Throws std::domain_error when dividing by zero.
DivMod divmod(const PrimeField& F, const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const PrimeField& F, Poly a, Poly b);

/// Rank over the rational function field F_q(t) of a rows x cols matrix of
/// polynomials given row-major.
std::size_t generic_rank(const PrimeField& F, std::vector<Poly> entries, std::size_t rows, std::size_t cols);

/// Determinant of a square matrix of polynomials (row-major), by fraction-free
/// Bareiss elimination.
Poly determinant(const PrimeField& F, std::vector<Poly> entries, std::size_t size);

}  // namespace cohsys::upoly
