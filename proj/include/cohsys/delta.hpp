#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cohsys/binary_form.hpp"

namespace cohsys {

/// Generic value of delta: t if a >= t+1, t-1 if a = t, a if 1 <= a < t.
/// Throws std::invalid_argument unless a, t >= 1.
int delta_formula(int a, int t);

/// Variant for E = O(a)^n with r-dimensional subbundle rank parameter:
/// 2r if a >= 2r, 2r-1 if a = 2r-1, a+1 if 1 <= a <= 2r-2.
/// Throws std::invalid_argument unless a, r >= 1.
int delta_prime_formula(int a, int r);

/// The pair of columns (g_1..g_t), (g'_1..g'_t) of forms of degree a-1 that
/// describe O^2 -> O(a-1)^t.
struct DeltaInput {
  int a = 1;
  int t = 1;
  std::vector<BinaryForm> g;
  std::vector<BinaryForm> g_prime;
};

/// Throws std::invalid_argument on a malformed input or t = 0.
void validate(const DeltaInput& input);

/// delta = t - max dim ker of lambda -> sum lambda_i (b g_i + c g'_i), the
/// maximum taken over all (b:c) in P^1 of the algebraic closure. A point with
/// kernel dimension >= kappa exists iff all (t-kappa+1)-minors of the pencil
/// b G + c G' vanish identically or share a common root.
int delta_bruteforce(const PrimeField& F, const DeltaInput& input);

/// Same maximization restricted to the q+1 points of P^1(F_q); an upper bound
/// for delta_bruteforce.
int delta_rational_points(const PrimeField& F, const DeltaInput& input);

/// Uniform random forms of degree a-1.
DeltaInput random_delta_input(const PrimeField& F, int a, int t, std::mt19937_64& rng);

}  // namespace cohsys
