#include "cohsys/delta.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cohsys/univariate.hpp"

namespace cohsys {

namespace {

/// Visits every increasing selection of `size` indices from [0, count).
template <typename Visitor>
bool for_each_combination(int count, int size, Visitor&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (visit(idx)) return true;
    int i = size - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == count - size + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Whether some point of P^1 over the closure makes every size x size minor
/// of the pencil vanish. Entry (row, col) of the pencil is g[col]_row + u g'[col]_row
/// after dehomogenizing at b = 1.
bool minors_have_common_zero(const PrimeField& F, const DeltaInput& in, int size) {
  const int rows = in.a;
  const int cols = in.t;
  if (size > rows || size > cols) return true;
  std::vector<BinaryForm> minors;
  bool all_zero = true;
  for_each_combination(rows, size, [&](const std::vector<int>& row_sel) {
    for_each_combination(cols, size, [&](const std::vector<int>& col_sel) {
      std::vector<upoly::Poly> entries;
      entries.reserve(static_cast<std::size_t>(size * size));
      for (int r : row_sel) {
        for (int c : col_sel) {
          upoly::Poly p{in.g[static_cast<std::size_t>(c)].coefficient(r),
                        in.g_prime[static_cast<std::size_t>(c)].coefficient(r)};
          upoly::trim(p);
          entries.push_back(std::move(p));
        }
      }
      const upoly::Poly det = upoly::determinant(F, std::move(entries), static_cast<std::size_t>(size));
      // Homogenize back to degree `size` in (b, c): coefficient of b^(size-i) c^i is det_i.
      std::vector<Residue> coeffs(static_cast<std::size_t>(size + 1), 0);
      for (std::size_t i = 0; i < det.size(); ++i) coeffs[i] = det[i];
      BinaryForm form(size, std::move(coeffs));
      if (!form.is_zero()) all_zero = false;
      minors.push_back(std::move(form));
      return false;
    });
    return false;
  });
  if (all_zero) return true;
  return vanishing_divisor_degree(F, minors) >= 1;
}

}  // namespace

int delta_formula(int a, int t) {
  if (a < 1 || t < 1) throw std::invalid_argument("delta_formula needs a >= 1 and t >= 1");
  if (a >= t + 1) return t;
  if (a == t) return t - 1;
  return a;
}

int delta_prime_formula(int a, int r) {
  if (a < 1 || r < 1) throw std::invalid_argument("delta_prime_formula needs a >= 1 and r >= 1");
  if (a >= 2 * r) return 2 * r;
  if (a == 2 * r - 1) return 2 * r - 1;
  return a + 1;
}

void validate(const DeltaInput& in) {
  if (in.a < 1) throw std::invalid_argument("delta input needs a >= 1");
  if (in.t < 1) throw std::invalid_argument("delta is defined only for t >= 1");
  if (in.g.size() != static_cast<std::size_t>(in.t) || in.g_prime.size() != static_cast<std::size_t>(in.t)) {
    throw std::invalid_argument("delta input needs t forms in each column");
  }
  auto check = [&](const BinaryForm& f) {
    if (f.degree() != in.a - 1) {
      throw std::invalid_argument("delta input forms must have degree a-1 = " + std::to_string(in.a - 1));
    }
  };
  for (const auto& f : in.g) check(f);
  for (const auto& f : in.g_prime) check(f);
}

int delta_bruteforce(const PrimeField& F, const DeltaInput& in) {
  validate(in);
  for (int kappa = in.t; kappa >= 1; --kappa) {
    if (minors_have_common_zero(F, in, in.t - kappa + 1)) return in.t - kappa;
  }
  return in.t;
}

int delta_rational_points(const PrimeField& F, const DeltaInput& in) {
  validate(in);
  const std::uint32_t q = F.modulus();
  std::size_t best = 0;
  for (std::uint32_t p = 0; p <= q; ++p) {
    // Points (1:p) for p < q, and (0:1).
    const Residue b = p < q ? 1 : 0;
    const Residue c = p < q ? p : 1;
    FieldMatrix m(F, static_cast<std::size_t>(in.a), static_cast<std::size_t>(in.t));
    for (int col = 0; col < in.t; ++col) {
      for (int row = 0; row < in.a; ++row) {
        m(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
            F.add(F.mul(b, in.g[static_cast<std::size_t>(col)].coefficient(row)),
                  F.mul(c, in.g_prime[static_cast<std::size_t>(col)].coefficient(row)));
      }
    }
    best = std::max(best, kernel_dimension(m));
  }
  return in.t - static_cast<int>(best);
}

DeltaInput random_delta_input(const PrimeField& F, int a, int t, std::mt19937_64& rng) {
  DeltaInput in;
  in.a = a;
  in.t = t;
  auto draw = [&] {
    std::vector<Residue> c(static_cast<std::size_t>(a));
    for (auto& x : c) x = static_cast<Residue>(rng() % F.modulus());
    return BinaryForm(a - 1, std::move(c));
  };
  for (int i = 0; i < t; ++i) {
    in.g.push_back(draw());
    in.g_prime.push_back(draw());
  }
  return in;
}

}  // namespace cohsys
