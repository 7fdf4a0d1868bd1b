#pragma once

#include <cstdint>
#include <functional>

#include "cohsys/field_matrix.hpp"

namespace cohsys {

/// Number of w-dimensional subspaces of F_q^k. Throws std::overflow_error if
/// the count does not fit in 64 bits.
std::uint64_t gaussian_binomial(int k, int w, std::uint64_t q);

/// Calls visit(basis) for every w-dimensional subspace of F_q^k, where basis is
/// the w x k reduced row echelon representative. Order: pivot sets in
/// lexicographic order, then free entries as a base-q counter with the last
/// entry varying fastest. Returns true if visit returned true (early stop).
bool for_each_subspace(const PrimeField& F, int k, int w, const std::function<bool(const FieldMatrix&)>& visit);

}  // namespace cohsys
