#include "cohsys/field_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cohsys {

FieldMatrix FieldMatrix::identity(const PrimeField& field, std::size_t size) {
  FieldMatrix m(field, size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows() || a.field() != b.field()) {
    throw std::invalid_argument("matrix product: incompatible operands");
  }
  const PrimeField& F = a.field();
  FieldMatrix out(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Residue x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = F.add(out(i, j), F.mul(x, b(k, j)));
    }
  }
  return out;
}

std::size_t row_reduce(FieldMatrix& m) {
  const PrimeField& F = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    }
    const Residue inv = F.inv(m(rank, c));
    for (std::size_t j = c; j < cols; ++j) m(rank, j) = F.mul(m(rank, j), inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Residue factor = m(r, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m(r, j) = F.sub(m(r, j), F.mul(factor, m(rank, j)));
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(FieldMatrix m) { return row_reduce(m); }

std::size_t kernel_dimension(const FieldMatrix& m) { return m.cols() - rank(m); }

}  // namespace cohsys
