#include "cohsys/univariate.hpp"

#include <stdexcept>
#include <utility>

namespace cohsys::upoly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const PrimeField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

Poly sub(const PrimeField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly mul(const PrimeField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly scale(const PrimeField& F, const Poly& a, Residue c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

DivMod divmod(const PrimeField& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {{}, rem};
  Poly quot(rem.size() - b.size() + 1, 0);
  const Residue lead_inv = F.inv(b.back());
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const Residue c = F.mul(rem.back(), lead_inv);
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = F.sub(rem[shift + j], F.mul(c, b[j]));
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

Poly gcd(const PrimeField& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(F, a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(F, a, F.inv(a.back()));
  return a;
}

std::size_t generic_rank(const PrimeField& F, std::vector<Poly> m, std::size_t rows, std::size_t cols) {
  for (auto& p : m) trim(p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (!m[r * cols + c].empty()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[pivot * cols + j], m[rank * cols + j]);
    }
    const Poly p = m[rank * cols + c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Poly f = m[r * cols + c];
      if (f.empty()) continue;
      // row_r <- p * row_r - f * row_pivot, then strip the common content.
      Poly content;
      for (std::size_t j = c; j < cols; ++j) {
        m[r * cols + j] = sub(F, mul(F, p, m[r * cols + j]), mul(F, f, m[rank * cols + j]));
        content = gcd(F, content, m[r * cols + j]);
      }
      if (degree(content) > 0) {
        for (std::size_t j = c; j < cols; ++j) {
          if (!m[r * cols + j].empty()) m[r * cols + j] = divmod(F, m[r * cols + j], content).quotient;
        }
      }
    }
    ++rank;
  }
  return rank;
}

Poly determinant(const PrimeField& F, std::vector<Poly> m, std::size_t n) {
  if (n == 0) return {1};
  for (auto& p : m) trim(p);
  bool negate = false;
  Poly previous{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k].empty()) {
      std::size_t swap_row = n;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (!m[r * n + k].empty()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap_row * n + j]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = sub(F, mul(F, m[k * n + k], m[i * n + j]), mul(F, m[i * n + k], m[k * n + j]));
        DivMod qr = divmod(F, num, previous);
        if (!qr.remainder.empty()) throw std::logic_error("Bareiss division left a remainder");
        m[i * n + j] = std::move(qr.quotient);
      }
      m[i * n + k].clear();
    }
    previous = m[k * n + k];
  }
  Poly det = m[(n - 1) * n + (n - 1)];
  if (negate) det = scale(F, det, F.neg(1));
  return det;
}

}  // namespace cohsys::upoly
