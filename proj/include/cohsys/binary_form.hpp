#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cohsys/field_matrix.hpp"
#include "cohsys/prime_field.hpp"

namespace cohsys {

/// Homogeneous polynomial in x, y over F_q. The coefficient of x^(D-i) y^i is
/// stored at index i, D = degree(). A zero form either occupies a degree slot
/// (all coefficients zero) or carries the sentinel degree -1 with no
/// coefficients.
class BinaryForm {
 public:
  static constexpr int kUnspecifiedDegree = -1;

  /// The zero sentinel.
  BinaryForm() = default;

  /// Coefficients must already be residues; length must be degree + 1.
  BinaryForm(int degree, std::vector<Residue> coefficients);

  /// Reduces signed integer coefficients into F_q.
  static BinaryForm from_integers(const PrimeField& F, int degree, std::span<const std::int64_t> coefficients);
  /// Zero form of the given degree slot (degree -1 gives the sentinel).
  static BinaryForm zero(int degree);
  static BinaryForm x_power(int x_exp, int y_exp);

  int degree() const noexcept { return degree_; }
  const std::vector<Residue>& coefficients() const noexcept { return coefficients_; }
  Residue coefficient(int i) const { return coefficients_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const noexcept;
  bool is_sentinel() const noexcept { return degree_ == kUnspecifiedDegree; }

  /// Exponent of the largest power of y dividing the form; throws on zero.
  int y_valuation() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  int degree_ = kUnspecifiedDegree;
  std::vector<Residue> coefficients_;
};

/// Sum of two forms of equal degree. A zero operand of any degree acts as the identity.
BinaryForm add(const PrimeField& F, const BinaryForm& f, const BinaryForm& g);
BinaryForm scale(const PrimeField& F, const BinaryForm& f, Residue c);
/// Product; a sentinel operand yields the sentinel.
BinaryForm multiply(const PrimeField& F, const BinaryForm& f, const BinaryForm& g);
/// Value of f at the point (x, y) = (b, c).
Residue evaluate(const PrimeField& F, const BinaryForm& f, Residue b, Residue c);

/// f(p x + q y, r x + s y) for the 2x2 matrix {p, q, r, s}.
BinaryForm linear_substitution(const PrimeField& F, const BinaryForm& f, const std::array<Residue, 4>& m);

/// Matrix of g -> f*g from forms of degree j to forms of degree j + deg f, in
/// the monomial bases x^(j-i) y^i. Shape max(0, j+deg f+1) x max(0, j+1).
FieldMatrix multiplication_matrix(const PrimeField& F, const BinaryForm& f, int j);

/// Degree of the common zero divisor of the forms over the algebraic closure
/// of F_q, i.e. the degree of their homogeneous gcd. Zero forms are skipped.
/// Throws std::invalid_argument("indeterminate divisor") if every form is zero.
int vanishing_divisor_degree(const PrimeField& F, std::span<const BinaryForm> forms);

}  // namespace cohsys
