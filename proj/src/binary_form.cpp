#include "cohsys/binary_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cohsys/univariate.hpp"

namespace cohsys {

BinaryForm::BinaryForm(int degree, std::vector<Residue> coefficients)
    : degree_(degree), coefficients_(std::move(coefficients)) {
  if (degree < kUnspecifiedDegree) throw std::invalid_argument("binary form degree below -1");
  if (coefficients_.size() != static_cast<std::size_t>(degree + 1)) {
    throw std::invalid_argument("binary form of degree " + std::to_string(degree) + " needs " +
                                std::to_string(degree + 1) + " coefficients, got " +
                                std::to_string(coefficients_.size()));
  }
}

BinaryForm BinaryForm::from_integers(const PrimeField& F, int degree, std::span<const std::int64_t> coefficients) {
  std::vector<Residue> c;
  c.reserve(coefficients.size());
  for (auto v : coefficients) c.push_back(F.reduce(v));
  return BinaryForm(degree, std::move(c));
}

BinaryForm BinaryForm::zero(int degree) {
  if (degree < kUnspecifiedDegree) return BinaryForm();
  return BinaryForm(degree, std::vector<Residue>(static_cast<std::size_t>(degree + 1), 0));
}

BinaryForm BinaryForm::x_power(int x_exp, int y_exp) {
  std::vector<Residue> c(static_cast<std::size_t>(x_exp + y_exp + 1), 0);
  c[static_cast<std::size_t>(y_exp)] = 1;
  return BinaryForm(x_exp + y_exp, std::move(c));
}

bool BinaryForm::is_zero() const noexcept {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](Residue r) { return r == 0; });
}

int BinaryForm::y_valuation() const {
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] != 0) return static_cast<int>(i);
  }
  throw std::invalid_argument("y-valuation of the zero form");
}

BinaryForm add(const PrimeField& F, const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero() && (f.is_sentinel() || f.degree() != g.degree())) return g;
  if (g.is_zero() && (g.is_sentinel() || g.degree() != f.degree())) return f;
  if (f.degree() != g.degree()) throw std::invalid_argument("adding binary forms of different degrees");
  std::vector<Residue> c(f.coefficients().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(f.coefficients()[i], g.coefficients()[i]);
  return BinaryForm(f.degree(), std::move(c));
}

BinaryForm scale(const PrimeField& F, const BinaryForm& f, Residue c) {
  std::vector<Residue> out(f.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(f.coefficients()[i], c);
  return BinaryForm(f.degree(), std::move(out));
}

BinaryForm multiply(const PrimeField& F, const BinaryForm& f, const BinaryForm& g) {
  if (f.is_sentinel() || g.is_sentinel()) return BinaryForm();
  std::vector<Residue> c(static_cast<std::size_t>(f.degree() + g.degree() + 1), 0);
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
    const Residue a = f.coefficients()[i];
    if (a == 0) continue;
    for (std::size_t j = 0; j < g.coefficients().size(); ++j) {
      c[i + j] = F.add(c[i + j], F.mul(a, g.coefficients()[j]));
    }
  }
  return BinaryForm(f.degree() + g.degree(), std::move(c));
}

Residue evaluate(const PrimeField& F, const BinaryForm& f, Residue b, Residue c) {
  Residue acc = 0;
  const int D = f.degree();
  for (int i = 0; i <= D; ++i) {
    const Residue term = F.mul(F.pow(b, static_cast<std::uint64_t>(D - i)), F.pow(c, static_cast<std::uint64_t>(i)));
    acc = F.add(acc, F.mul(f.coefficient(i), term));
  }
  return acc;
}

BinaryForm linear_substitution(const PrimeField& F, const BinaryForm& f, const std::array<Residue, 4>& m) {
  if (f.is_sentinel()) return f;
  const int D = f.degree();
  const BinaryForm x_image(1, {m[0], m[1]});
  const BinaryForm y_image(1, {m[2], m[3]});
  BinaryForm acc = BinaryForm::zero(D);
  for (int i = 0; i <= D; ++i) {
    if (f.coefficient(i) == 0) continue;
    BinaryForm term(0, {f.coefficient(i)});
    for (int e = 0; e < D - i; ++e) term = multiply(F, term, x_image);
    for (int e = 0; e < i; ++e) term = multiply(F, term, y_image);
    acc = add(F, acc, term);
  }
  return acc;
}

FieldMatrix multiplication_matrix(const PrimeField& F, const BinaryForm& f, int j) {
  const int rows = std::max(0, j + f.degree() + 1);
  const int cols = std::max(0, j + 1);
  FieldMatrix m(F, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  if (f.is_sentinel()) return m;
  for (int i = 0; i < cols; ++i) {
    for (int k = 0; k <= f.degree(); ++k) m(static_cast<std::size_t>(i + k), static_cast<std::size_t>(i)) = f.coefficient(k);
  }
  return m;
}

int vanishing_divisor_degree(const PrimeField& F, std::span<const BinaryForm> forms) {
  int common_y = -1;
  upoly::Poly g;
  bool any = false;
  for (const BinaryForm& f : forms) {
    if (f.is_zero()) continue;
    const int v = f.y_valuation();
    common_y = any ? std::min(common_y, v) : v;
    // Dehomogenize at y = 1: the coefficient of t^(D-i) is f_i.
    const int D = f.degree();
    upoly::Poly p(static_cast<std::size_t>(D + 1), 0);
    for (int i = 0; i <= D; ++i) p[static_cast<std::size_t>(D - i)] = f.coefficient(i);
    upoly::trim(p);
    g = any ? upoly::gcd(F, g, p) : upoly::gcd(F, p, {});
    any = true;
  }
  if (!any) throw std::invalid_argument("indeterminate divisor");
  return common_y + upoly::degree(g);
}

}  // namespace cohsys
