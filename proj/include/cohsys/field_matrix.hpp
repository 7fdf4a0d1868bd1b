#pragma once

#include <cstddef>
#include <vector>

#include "cohsys/prime_field.hpp"

namespace cohsys {

/// Dense rows x cols matrix over F_q, row-major.
class FieldMatrix {
 public:
  FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  static FieldMatrix identity(const PrimeField& field, std::size_t size);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Residue operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Stores v reduced mod q.
  void set(std::size_t r, std::size_t c, std::int64_t v) { (*this)(r, c) = field_.reduce(v); }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
};

/// Throws std::invalid_argument on shape or field mismatch.
FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);

/// In-place reduction to reduced row echelon form with first-nonzero pivoting.
/// Returns the rank.
std::size_t row_reduce(FieldMatrix& m);

std::size_t rank(FieldMatrix m);

/// cols(m) - rank(m).
std::size_t kernel_dimension(const FieldMatrix& m);

}  // namespace cohsys
