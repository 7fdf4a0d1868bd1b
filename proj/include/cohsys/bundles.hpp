#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cohsys/binary_form.hpp"
#include "cohsys/splitting_type.hpp"

namespace cohsys {

/// Balanced type O(a+1)^s + O(a)^(n-s) with d = a n + s, 0 <= s < n.
SplittingType generic_splitting(int n, int d);

/// a_1 - a_n <= 1.
bool is_generic_splitting(const SplittingType& type);

struct Cohomology {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  friend bool operator==(const Cohomology&, const Cohomology&) = default;
};

/// h^0 and h^1 of E(j) for E of the given type.
Cohomology cohomology(const SplittingType& type, int twist);

/// Splitting type of End(E) = E^* (x) E, i.e. all differences a_i - a_j.
SplittingType endomorphism_type(const SplittingType& type);

/// Largest degree of a rank-r subbundle: the sum of the r largest entries.
/// Throws std::invalid_argument unless 0 <= r <= rank.
std::int64_t max_subbundle_degree(const SplittingType& type, int r);

/// Whether O^k -> E -> G -> 0 can exist, by the Shatz criterion applied to
/// E and F = G + O^k: HNP(F) >= HNP(E), and b_i > a_i exactly for i <= n - k.
/// Throws std::invalid_argument if rank(e) != rank(g) + k.
bool shatz_embedding_exists(const SplittingType& e, const SplittingType& g, int k);

/// Matrix of binary forms describing a map of split bundles
/// O(source_1) + ... -> O(target_1) + ..., entry (i, j) of degree
/// target_i - source_j (or zero).
class FormMatrix {
 public:
  FormMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BinaryForm& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BinaryForm& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BinaryForm> entries_;
};

/// Dimension of the kernel of H^0(sum O(source_j + twist)) -> H^0(sum O(target_i + twist)).
std::size_t probe_kernel_dimension(const PrimeField& F, std::span<const int> source, std::span<const int> target,
                                   const FormMatrix& m, int twist);

/// Splitting type of the kernel subbundle N = ker(m). Source and target degrees
/// are taken in the order the matrix uses (they need not be sorted).
/// Throws std::invalid_argument on an inconsistent degree profile and
/// std::logic_error if the twist probes fail to stabilize.
SplittingType kernel_splitting(const PrimeField& F, std::span<const int> source, std::span<const int> target,
                               const FormMatrix& m);

/// A global section of E = sum O(a_i): component i is a form of degree a_i (or zero).
using Section = std::vector<BinaryForm>;

struct SaturationResult {
  int rank = 0;
  std::int64_t degree = 0;
  /// Splitting type of E/F.
  SplittingType quotient;
  friend bool operator==(const SaturationResult&, const SaturationResult&) = default;
};

/// Numerical invariants of the smallest subbundle F of E whose sections contain
/// the given sections, computed from the kernel of the transposed section
/// matrix E^* -> O^w: E/F is the dual of that kernel.
SaturationResult saturate(const PrimeField& F, const SplittingType& type, std::span<const Section> sections);

/// Throws std::invalid_argument unless each component matches the type's degree.
void validate_section(const SplittingType& type, const Section& section);

}  // namespace cohsys
