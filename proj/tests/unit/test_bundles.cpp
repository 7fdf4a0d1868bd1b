#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cohsys/bundles.hpp"
#include "cohsys/splitting_type.hpp"
#include "oracles.hpp"

using namespace cohsys;

namespace {

BinaryForm form(const PrimeField& F, int degree, std::vector<std::int64_t> c) {
  return BinaryForm::from_integers(F, degree, c);
}

std::int64_t h0_from_type(const SplittingType& t, int j) {
  std::int64_t h = 0;
  for (int b : t.degrees()) h += std::max(0, b + j + 1);
  return h;
}

Section random_section(const PrimeField& F, const SplittingType& type, std::mt19937_64& rng) {
  Section s;
  for (int a : type.degrees()) s.push_back(a < 0 ? BinaryForm() : oracle::random_form(F, a, rng));
  return s;
}

}  // namespace

TEST_CASE("splitting types sort, dualize and print") {
  const SplittingType t{2, 3, 2};
  CHECK(t.to_string() == "(3,2,2)");
  CHECK(t.degree() == 7);
  CHECK(t.rank() == 3);
  CHECK(t.dual() == SplittingType{-2, -2, -3});
  CHECK(SplittingType{}.empty());
  CHECK(SplittingType{}.to_string() == "()");
}

TEST_CASE("generic splitting examples") {
  CHECK(generic_splitting(3, 7) == SplittingType{3, 2, 2});
  CHECK(generic_splitting(4, 6) == SplittingType{2, 2, 1, 1});
  CHECK(generic_splitting(2, -3) == SplittingType{-1, -2});
  CHECK_THROWS_AS(generic_splitting(0, 3), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    for (int d = -30; d <= 30; ++d) {
      const SplittingType t = generic_splitting(n, d);
      CHECK(t.rank() == n);
      CHECK(t.degree() == d);
      CHECK(is_generic_splitting(t));
      // h^1(End E) = 0 exactly for balanced types.
      CHECK(cohomology(endomorphism_type(t), 0).h1 == 0);
    }
  }
  CHECK_FALSE(is_generic_splitting(SplittingType{3, 1}));
  CHECK(cohomology(endomorphism_type(SplittingType{3, 1}), 0).h1 == 1);
}

TEST_CASE("cohomology examples and Riemann-Roch") {
  CHECK(cohomology(SplittingType{1, 1}, 0) == Cohomology{4, 0});
  CHECK(cohomology(SplittingType{-2}, 0) == Cohomology{0, 1});
  CHECK(cohomology(SplittingType{1, 1, 0, 0, 0, 0, -1, -1, 0}, 0).h1 == 0);
  const SplittingType t{5, 0, -3, -7};
  for (int j = -12; j <= 12; ++j) {
    const Cohomology c = cohomology(t, j);
    CHECK(c.h0 - c.h1 == t.degree() + t.rank() * (j + 1));
    // Serre duality: h^1(E(j)) = h^0(E^*(-j-2)).
    CHECK(c.h1 == cohomology(t.dual(), -j - 2).h0);
  }
}

TEST_CASE("endomorphism type lists all differences") {
  const SplittingType e = endomorphism_type(SplittingType{3, 2, 2});
  CHECK(e.rank() == 9);
  CHECK(e.degree() == 0);
  CHECK(e == SplittingType{1, 1, 0, 0, 0, 0, -1, -1, 0});
}

TEST_CASE("max subbundle degree") {
  CHECK(max_subbundle_degree(SplittingType{3, 2, 2}, 2) == 5);
  CHECK(max_subbundle_degree(SplittingType{2, 2, 1, 1}, 1) == 2);
  CHECK(max_subbundle_degree(SplittingType{4, -1}, 0) == 0);
  CHECK(max_subbundle_degree(SplittingType{}, 0) == 0);
  CHECK_THROWS_AS(max_subbundle_degree(SplittingType{1, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(max_subbundle_degree(SplittingType{1, 1}, -1), std::invalid_argument);
}

TEST_CASE("Harder-Narasimhan polygon dominance") {
  const HNPolygon e(SplittingType{3, 3, 2});
  const HNPolygon f(SplittingType{4, 4, 0});
  CHECK(f.dominates(e));
  CHECK_FALSE(e.dominates(f));
  CHECK(e.dominates(e));
  CHECK_FALSE(e.dominates(HNPolygon(SplittingType{1, 1})));
}

TEST_CASE("Shatz criterion examples") {
  CHECK(shatz_embedding_exists(SplittingType{3, 3, 2}, SplittingType{4, 4}, 1));
  CHECK_FALSE(shatz_embedding_exists(SplittingType{3, 3, 2}, SplittingType{4, 3}, 1));
  CHECK_THROWS_AS(shatz_embedding_exists(SplittingType{3, 3, 2}, SplittingType{4}, 1), std::invalid_argument);
  // Quotients built with l >= 1: E generic of degree d, G generic of rank n-k, degree d.
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int d = 1; d <= 30; ++d) {
        const SplittingType e = generic_splitting(n, d);
        const SplittingType g = generic_splitting(n - k, d);
        const int a = (d + n - 1) / n;
        const int t = n * a - d;
        const int diff = k * a - t;
        const int l = diff >= 0 ? diff / (n - k) : -((-diff + n - k - 1) / (n - k));
        if (l >= 1) {
          CAPTURE(n);
          CAPTURE(d);
          CAPTURE(k);
          CHECK(shatz_embedding_exists(e, g, k));
        }
      }
    }
  }
}

TEST_CASE("kernel splitting examples") {
  const PrimeField F(101);
  const std::vector<int> source{-1, -1};
  const std::vector<int> target{0};
  FormMatrix m(1, 2);
  m(0, 0) = BinaryForm::x_power(1, 0);
  m(0, 1) = BinaryForm::x_power(0, 1);
  CHECK(kernel_splitting(F, source, target, m) == SplittingType{-2});

  FormMatrix zero(1, 2);
  CHECK(kernel_splitting(F, source, target, zero) == SplittingType{-1, -1});

  FormMatrix half(1, 2);
  half(0, 0) = BinaryForm::x_power(1, 0);
  half(0, 1) = BinaryForm::zero(1);
  CHECK(kernel_splitting(F, source, target, half) == SplittingType{-1});

  FormMatrix bad(1, 2);
  bad(0, 0) = BinaryForm::x_power(2, 0);
  CHECK_THROWS_AS(kernel_splitting(F, source, target, bad), std::invalid_argument);
  FormMatrix wrong_shape(2, 2);
  CHECK_THROWS_AS(kernel_splitting(F, source, target, wrong_shape), std::invalid_argument);
}

TEST_CASE("kernel splitting reproduces every twist dimension") {
  const PrimeField F(7);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const int ns = 1 + static_cast<int>(rng() % 4);
    const int nt = 1 + static_cast<int>(rng() % 3);
    std::vector<int> source(static_cast<std::size_t>(ns));
    std::vector<int> target(static_cast<std::size_t>(nt));
    for (int& s : source) s = -static_cast<int>(rng() % 4);
    for (int& t : target) t = static_cast<int>(rng() % 3);
    FormMatrix m(static_cast<std::size_t>(nt), static_cast<std::size_t>(ns));
    for (int i = 0; i < nt; ++i) {
      for (int j = 0; j < ns; ++j) {
        const int deg = target[static_cast<std::size_t>(i)] - source[static_cast<std::size_t>(j)];
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            rng() % 5 == 0 ? BinaryForm::zero(deg) : oracle::random_form(F, deg, rng);
      }
    }
    const SplittingType kernel = kernel_splitting(F, source, target, m);
    CHECK(kernel.rank() <= ns);
    for (int j = -12; j <= 12; ++j) {
      CAPTURE(j);
      CHECK(static_cast<std::int64_t>(probe_kernel_dimension(F, source, target, m, j)) == h0_from_type(kernel, j));
    }
  }
}

TEST_CASE("saturation examples") {
  const PrimeField F(101);
  const SplittingType e{1, 1};
  const BinaryForm x = BinaryForm::x_power(1, 0);
  const BinaryForm y = BinaryForm::x_power(0, 1);
  const std::vector<Section> xy{{x, y}};
  CHECK(saturate(F, e, xy) == SaturationResult{1, 0, SplittingType{2}});
  CHECK(saturate(F, e, std::vector<Section>{}) == SaturationResult{0, 0, e});
  const std::vector<Section> x0{{x, BinaryForm::zero(1)}};
  CHECK(saturate(F, e, x0) == SaturationResult{1, 1, SplittingType{1}});
  const std::vector<Section> bad{{x}};
  CHECK_THROWS_AS(saturate(F, e, bad), std::invalid_argument);
  const std::vector<Section> bad_degree{{form(F, 2, {1, 0, 0}), y}};
  CHECK_THROWS_AS(saturate(F, e, bad_degree), std::invalid_argument);
}

TEST_CASE("saturation of one section has the degree of its zero divisor") {
  std::mt19937_64 rng(41);
  for (std::uint32_t q : {3u, 101u}) {
    const PrimeField F(q);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const SplittingType type = generic_splitting(n, static_cast<int>(rng() % 9) - 1 + n);
      Section s = random_section(F, type, rng);
      const BinaryForm planted = oracle::random_form(F, static_cast<int>(rng() % 2), rng);
      std::vector<BinaryForm> nonzero;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (type[i] < planted.degree() || planted.is_zero()) continue;
        s[i] = multiply(F, planted, oracle::random_form(F, type[i] - planted.degree(), rng));
      }
      for (const auto& f : s) {
        if (!f.is_zero()) nonzero.push_back(f);
      }
      if (nonzero.empty()) continue;
      const SaturationResult sat = saturate(F, type, std::vector<Section>{s});
      CHECK(sat.rank == 1);
      CHECK(sat.degree == vanishing_divisor_degree(F, nonzero));
      CHECK(sat.quotient.degree() + sat.degree == type.degree());
    }
  }
}

TEST_CASE("saturation of independent sections matches the gcd of maximal minors") {
  const PrimeField F(5);
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const SplittingType type = generic_splitting(n, n + static_cast<int>(rng() % 6));
    const int w = 1 + static_cast<int>(rng() % (n - 1));
    std::vector<Section> sections;
    for (int l = 0; l < w; ++l) sections.push_back(random_section(F, type, rng));
    // gcd of all w x w minors of the n x w matrix (rows = summands).
    std::vector<BinaryForm> minors;
    std::vector<int> rows(static_cast<std::size_t>(w));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != w) continue;
      std::vector<std::vector<BinaryForm>> sub;
      for (int i = 0; i < n; ++i) {
        if (!(mask >> i & 1)) continue;
        std::vector<BinaryForm> row;
        for (int l = 0; l < w; ++l) row.push_back(sections[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)]);
        sub.push_back(row);
      }
      const BinaryForm det = oracle::form_det(F, sub);
      if (!det.is_zero()) minors.push_back(det);
    }
    if (minors.empty()) continue;  // sections dependent over F_q(t)
    const SaturationResult sat = saturate(F, type, sections);
    CHECK(sat.rank == w);
    CHECK(sat.degree == vanishing_divisor_degree(F, minors));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("saturation of all global sections of a globally generated bundle is everything") {
  const PrimeField F(11);
  const SplittingType type{2, 1, 0};
  std::vector<Section> basis;
  for (std::size_t i = 0; i < 3; ++i) {
    for (int c = 0; c <= type[i]; ++c) {
      Section s;
      for (std::size_t j = 0; j < 3; ++j) s.push_back(BinaryForm::zero(type[j]));
      std::vector<Residue> coeffs(static_cast<std::size_t>(type[i]) + 1, 0);
      coeffs[static_cast<std::size_t>(c)] = 1;
      s[i] = BinaryForm(type[i], coeffs);
      basis.push_back(s);
    }
  }
  const SaturationResult sat = saturate(F, type, basis);
  CHECK(sat.rank == 3);
  CHECK(sat.degree == 3);
  CHECK(sat.quotient.empty());
}
