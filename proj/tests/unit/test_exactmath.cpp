#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cohsys/binary_form.hpp"
#include "cohsys/field_matrix.hpp"
#include "cohsys/prime_field.hpp"
#include "cohsys/rational.hpp"
#include "cohsys/univariate.hpp"
#include "oracles.hpp"

using namespace cohsys;

namespace {

bool trial_division_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t p = 2; p < v; ++p) {
    if (v % p == 0) return false;
  }
  return true;
}

FieldMatrix from_rows(const PrimeField& F, const std::vector<std::vector<std::int64_t>>& rows) {
  FieldMatrix m(F, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

BinaryForm form(const PrimeField& F, int degree, std::vector<std::int64_t> c) {
  return BinaryForm::from_integers(F, degree, c);
}

}  // namespace

TEST_CASE("primality agrees with trial division") {
  for (std::uint64_t v = 0; v < 3000; ++v) CHECK(is_prime(v) == trial_division_prime(v));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483647ULL * 3));
}

TEST_CASE("prime field construction and inverses") {
  CHECK_THROWS_AS(PrimeField(100), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  const PrimeField F(101);
  CHECK(F.reduce(-1) == 100);
  CHECK(F.reduce(205) == 3);
  CHECK(F.centered(100) == -1);
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
  for (Residue a = 1; a < 101; ++a) {
    CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.pow(a, 100) == 1);
  }
  const PrimeField big(PrimeField::kMaxModulus);
  CHECK(big.mul(big.inv(123456789), 123456789) == 1);
}

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("7/2")) == "7/2");
  CHECK(to_string(parse_rational(" 6/4 ")) == "3/2");
  CHECK(to_string(parse_rational("-3")) == "-3");
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(parse_rational("-1/3") == make_rational(-1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("kernel dimension examples") {
  const PrimeField F(101);
  CHECK(kernel_dimension(FieldMatrix::identity(F, 2)) == 0);
  CHECK(kernel_dimension(FieldMatrix(F, 1, 3)) == 3);
  CHECK(kernel_dimension(from_rows(F, {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(FieldMatrix(F, 0, 4)) == 0);
}

TEST_CASE("row reduction gives a reduced echelon form") {
  const PrimeField F(7);
  FieldMatrix m = from_rows(F, {{0, 2, 4, 1}, {3, 1, 0, 2}, {3, 3, 4, 3}});
  const std::size_t r = row_reduce(m);
  CHECK(r == 2);
  CHECK(m(0, 0) == 1);
  CHECK(m(1, 0) == 0);
  CHECK(m(1, 1) == 1);
  CHECK(m(0, 1) == 0);
  for (std::size_t c = 0; c < 4; ++c) CHECK(m(2, c) == 0);
}

TEST_CASE("matrix product checks shapes") {
  const PrimeField F(11);
  const FieldMatrix a = from_rows(F, {{1, 2, 3}});
  const FieldMatrix b = from_rows(F, {{1}, {1}, {1}});
  CHECK((a * b)(0, 0) == 6);
  CHECK_THROWS_AS(a * a, std::invalid_argument);
}

TEST_CASE("rank agrees with the largest non-vanishing minor") {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {2u, 3u, 5u, 101u}) {
    const PrimeField F(q);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t rows = 1 + rng() % 4;
      const std::size_t cols = 1 + rng() % 4;
      std::vector<std::vector<Residue>> raw(rows, std::vector<Residue>(cols));
      FieldMatrix m(F, rows, cols);
      // Low ranks are over-represented by reusing earlier rows.
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          raw[r][c] = r > 0 && rng() % 3 == 0 ? F.mul(raw[r - 1][c], 2 % q) : static_cast<Residue>(rng() % q);
          m(r, c) = raw[r][c];
        }
      }
      CHECK(rank(m) == oracle::minor_rank(F, raw));
    }
  }
}

TEST_CASE("univariate gcd divides both arguments and absorbs planted factors") {
  const PrimeField F(101);
  std::mt19937_64 rng(3);
  auto random_poly = [&](int deg) {
    upoly::Poly p(static_cast<std::size_t>(deg) + 1);
    for (auto& x : p) x = static_cast<Residue>(rng() % 101);
    p.back() = 1 + static_cast<Residue>(rng() % 100);
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const upoly::Poly g = random_poly(static_cast<int>(rng() % 4));
    const upoly::Poly a = upoly::mul(F, g, random_poly(static_cast<int>(rng() % 4)));
    const upoly::Poly b = upoly::mul(F, g, random_poly(static_cast<int>(rng() % 4)));
    const upoly::Poly h = upoly::gcd(F, a, b);
    CHECK(h.back() == 1);
    CHECK(upoly::is_zero(upoly::divmod(F, a, h).remainder));
    CHECK(upoly::is_zero(upoly::divmod(F, b, h).remainder));
    CHECK(upoly::is_zero(upoly::divmod(F, h, upoly::gcd(F, g, g)).remainder));
  }
  CHECK(upoly::is_zero(upoly::gcd(F, {}, {})));
  CHECK_THROWS_AS(upoly::divmod(F, {1, 1}, {}), std::domain_error);
}

TEST_CASE("polynomial determinant matches cofactor expansion at sample points") {
  const PrimeField F(101);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<upoly::Poly> entries(n * n);
    for (auto& e : entries) {
      e = upoly::Poly(rng() % 3);
      for (auto& x : e) x = static_cast<Residue>(rng() % 101);
      upoly::trim(e);
    }
    const upoly::Poly det = upoly::determinant(F, entries, n);
    for (Residue u : {0u, 1u, 17u, 58u}) {
      std::vector<std::vector<Residue>> at(n, std::vector<Residue>(n));
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          Residue v = 0;
          const upoly::Poly& p = entries[r * n + c];
          for (std::size_t i = p.size(); i-- > 0;) v = F.add(F.mul(v, u), p[i]);
          at[r][c] = v;
        }
      }
      Residue value = 0;
      for (std::size_t i = det.size(); i-- > 0;) value = F.add(F.mul(value, u), det[i]);
      CHECK(value == oracle::cofactor_det(F, at));
    }
  }
}

TEST_CASE("generic rank is the maximal rank over evaluation points") {
  const PrimeField F(101);
  // [[t, 1], [t^2, t]] has rank 1 everywhere.
  CHECK(upoly::generic_rank(F, {{0, 1}, {1}, {0, 0, 1}, {0, 1}}, 2, 2) == 1);
  // [[t, 1], [1, t]] drops rank only at t = +-1.
  CHECK(upoly::generic_rank(F, {{0, 1}, {1}, {1}, {0, 1}}, 2, 2) == 2);
  CHECK(upoly::generic_rank(F, {{}, {}, {}}, 1, 3) == 0);
}

TEST_CASE("binary forms: construction, arithmetic and evaluation") {
  const PrimeField F(101);
  CHECK_THROWS_AS(BinaryForm(2, {1, 2}), std::invalid_argument);
  const BinaryForm x = BinaryForm::x_power(1, 0);
  const BinaryForm y = BinaryForm::x_power(0, 1);
  CHECK(x.coefficients() == std::vector<Residue>{1, 0});
  CHECK(y.coefficients() == std::vector<Residue>{0, 1});
  CHECK(BinaryForm().is_sentinel());
  CHECK(BinaryForm::zero(3).is_zero());
  CHECK(form(F, 3, {0, 0, 1, 0}).y_valuation() == 2);
  CHECK_THROWS(BinaryForm::zero(2).y_valuation());

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const BinaryForm f = oracle::random_form(F, static_cast<int>(rng() % 4), rng);
    const BinaryForm g = oracle::random_form(F, static_cast<int>(rng() % 4), rng);
    const BinaryForm h = oracle::random_form(F, f.degree(), rng);
    const Residue b = static_cast<Residue>(rng() % 101);
    const Residue c = static_cast<Residue>(rng() % 101);
    CHECK(evaluate(F, multiply(F, f, g), b, c) == F.mul(evaluate(F, f, b, c), evaluate(F, g, b, c)));
    CHECK(evaluate(F, add(F, f, h), b, c) == F.add(evaluate(F, f, b, c), evaluate(F, h, b, c)));
    CHECK(evaluate(F, scale(F, f, 7), b, c) == F.mul(7, evaluate(F, f, b, c)));
    const std::array<Residue, 4> sub{3, 5, 2, 9};
    CHECK(evaluate(F, linear_substitution(F, f, sub), b, c) ==
          evaluate(F, f, F.add(F.mul(3, b), F.mul(5, c)), F.add(F.mul(2, b), F.mul(9, c))));
  }
  CHECK(multiply(F, x, BinaryForm()).is_sentinel());
  CHECK(add(F, BinaryForm::zero(5), x) == x);
}

TEST_CASE("multiplication matrix examples and product agreement") {
  const PrimeField F(101);
  const FieldMatrix m = multiplication_matrix(F, BinaryForm::x_power(1, 0), 0);
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 1);
  CHECK(m(0, 0) == 1);
  CHECK(m(1, 0) == 0);

  const FieldMatrix z = multiplication_matrix(F, BinaryForm::zero(2), 1);
  CHECK(z.rows() == 4);
  CHECK(z.cols() == 2);
  CHECK(rank(z) == 0);

  const FieldMatrix s = multiplication_matrix(F, form(F, 1, {1, 1}), 1);
  REQUIRE(s.rows() == 3);
  REQUIRE(s.cols() == 2);
  CHECK(s == from_rows(F, {{1, 0}, {1, 1}, {0, 1}}));

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const BinaryForm f = oracle::random_form(F, static_cast<int>(rng() % 4), rng);
    const BinaryForm g = oracle::random_form(F, static_cast<int>(rng() % 4), rng);
    const FieldMatrix mm = multiplication_matrix(F, f, g.degree());
    const BinaryForm fg = multiply(F, f, g);
    for (std::size_t r = 0; r < mm.rows(); ++r) {
      Residue v = 0;
      for (std::size_t c = 0; c < mm.cols(); ++c) v = F.add(v, F.mul(mm(r, c), g.coefficient(static_cast<int>(c))));
      CHECK(v == fg.coefficient(static_cast<int>(r)));
    }
  }
  CHECK(multiplication_matrix(F, form(F, 2, {1, 0, 1}), -3).cols() == 0);
}

TEST_CASE("vanishing divisor degree examples") {
  const PrimeField F(101);
  const BinaryForm x = BinaryForm::x_power(1, 0);
  const BinaryForm y = BinaryForm::x_power(0, 1);
  CHECK(vanishing_divisor_degree(F, std::vector<BinaryForm>{x, y}) == 0);
  CHECK(vanishing_divisor_degree(F, std::vector<BinaryForm>{BinaryForm::x_power(2, 0), BinaryForm::x_power(1, 1)}) == 1);
  CHECK(vanishing_divisor_degree(F, std::vector<BinaryForm>{BinaryForm::x_power(2, 1)}) == 3);
  CHECK(vanishing_divisor_degree(F, std::vector<BinaryForm>{BinaryForm::zero(2), x}) == 1);
  CHECK_THROWS_AS(vanishing_divisor_degree(F, std::vector<BinaryForm>{BinaryForm::zero(2), BinaryForm()}),
                  std::invalid_argument);
  // x^2 + 1 is irreducible over F_3 but still a common factor.
  const PrimeField F3(3);
  const BinaryForm irr = form(F3, 2, {1, 0, 1});
  CHECK(vanishing_divisor_degree(F3, std::vector<BinaryForm>{multiply(F3, irr, x), multiply(F3, irr, y)}) == 2);
}

TEST_CASE("vanishing divisor degree matches the span-dimension oracle") {
  std::mt19937_64 rng(33);
  for (std::uint32_t q : {2u, 3u, 101u}) {
    const PrimeField F(q);
    for (int trial = 0; trial < 120; ++trial) {
      const BinaryForm common = oracle::random_form(F, static_cast<int>(rng() % 3), rng);
      if (common.is_zero()) continue;
      std::vector<BinaryForm> forms;
      const int count = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < count; ++i) {
        const BinaryForm f = multiply(F, common, oracle::random_form(F, static_cast<int>(rng() % 4), rng));
        if (!f.is_zero()) forms.push_back(f);
      }
      if (forms.empty()) continue;
      const int got = vanishing_divisor_degree(F, forms);
      CHECK(got == oracle::gcd_degree_by_span(F, forms));
      CHECK(got >= common.degree());
    }
  }
}
