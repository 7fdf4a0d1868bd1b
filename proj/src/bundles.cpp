#include "cohsys/bundles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cohsys/univariate.hpp"

namespace cohsys {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void validate_profile(std::span<const int> source, std::span<const int> target, const FormMatrix& m) {
  if (m.rows() != target.size() || m.cols() != source.size()) {
    throw std::invalid_argument("form matrix shape does not match source/target ranks");
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BinaryForm& f = m(i, j);
      const int slot = target[i] - source[j];
      if (f.degree() == slot) continue;
      if (f.is_zero() && (f.is_sentinel() || slot < 0)) continue;
      throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) + ") has degree " +
                                  std::to_string(f.degree()) + ", expected " + std::to_string(slot));
    }
  }
}

}  // namespace

SplittingType generic_splitting(int n, int d) {
  if (n < 1) throw std::invalid_argument("generic_splitting needs rank >= 1");
  const int a = floor_div(d, n);
  const int s = d - a * n;
  std::vector<int> degrees(static_cast<std::size_t>(n), a);
  std::fill(degrees.begin(), degrees.begin() + s, a + 1);
  return SplittingType(std::move(degrees));
}

bool is_generic_splitting(const SplittingType& type) {
  return type.empty() || type[0] - type[static_cast<std::size_t>(type.rank() - 1)] <= 1;
}

Cohomology cohomology(const SplittingType& type, int twist) {
  Cohomology c;
  for (int a : type.degrees()) {
    const std::int64_t v = static_cast<std::int64_t>(a) + twist + 1;
    if (v > 0) c.h0 += v;
    if (v < 0) c.h1 += -v;
  }
  return c;
}

SplittingType endomorphism_type(const SplittingType& type) {
  std::vector<int> diffs;
  diffs.reserve(static_cast<std::size_t>(type.rank() * type.rank()));
  for (int a : type.degrees()) {
    for (int b : type.degrees()) diffs.push_back(a - b);
  }
  return SplittingType(std::move(diffs));
}

std::int64_t max_subbundle_degree(const SplittingType& type, int r) {
  if (r < 0 || r > type.rank()) {
    throw std::invalid_argument("subbundle rank " + std::to_string(r) + " out of range for rank " +
                                std::to_string(type.rank()));
  }
  return std::accumulate(type.degrees().begin(), type.degrees().begin() + r, std::int64_t{0});
}

bool shatz_embedding_exists(const SplittingType& e, const SplittingType& g, int k) {
  if (k < 0 || e.rank() != g.rank() + k) {
    throw std::invalid_argument("shatz_embedding_exists: rank(e) must equal rank(g) + k");
  }
  std::vector<int> f(g.degrees().begin(), g.degrees().end());
  f.insert(f.end(), static_cast<std::size_t>(k), 0);
  const SplittingType F(std::move(f));
  if (!HNPolygon(F).dominates(HNPolygon(e))) return false;
  const int n = e.rank();
  for (int i = 0; i < n; ++i) {
    const bool bigger = F[static_cast<std::size_t>(i)] > e[static_cast<std::size_t>(i)];
    if (bigger != (i < n - k)) return false;
  }
  return true;
}

std::size_t probe_kernel_dimension(const PrimeField& F, std::span<const int> source, std::span<const int> target,
                                   const FormMatrix& m, int twist) {
  std::vector<std::size_t> col_offset(source.size() + 1, 0);
  std::vector<std::size_t> row_offset(target.size() + 1, 0);
  for (std::size_t c = 0; c < source.size(); ++c) {
    col_offset[c + 1] = col_offset[c] + static_cast<std::size_t>(std::max(0, source[c] + twist + 1));
  }
  for (std::size_t r = 0; r < target.size(); ++r) {
    row_offset[r + 1] = row_offset[r] + static_cast<std::size_t>(std::max(0, target[r] + twist + 1));
  }
  const std::size_t cols = col_offset.back();
  if (cols == 0) return 0;
  FieldMatrix big(F, row_offset.back(), cols);
  for (std::size_t r = 0; r < target.size(); ++r) {
    for (std::size_t c = 0; c < source.size(); ++c) {
      const BinaryForm& f = m(r, c);
      if (f.is_zero()) continue;
      const int width = source[c] + twist + 1;
      for (int i = 0; i < width; ++i) {
        for (int k = 0; k <= f.degree(); ++k) {
          big(row_offset[r] + static_cast<std::size_t>(i + k), col_offset[c] + static_cast<std::size_t>(i)) =
              f.coefficient(k);
        }
      }
    }
  }
  return kernel_dimension(big);
}

SplittingType kernel_splitting(const PrimeField& F, std::span<const int> source, std::span<const int> target,
                               const FormMatrix& m) {
  validate_profile(source, target, m);
  if (source.empty()) return {};

  std::vector<upoly::Poly> polys(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const BinaryForm& f = m(r, c);
      if (f.is_zero()) continue;
      const int D = f.degree();
      upoly::Poly p(static_cast<std::size_t>(D + 1), 0);
      for (int i = 0; i <= D; ++i) p[static_cast<std::size_t>(D - i)] = f.coefficient(i);
      upoly::trim(p);
      polys[r * m.cols() + c] = std::move(p);
    }
  }
  const std::size_t generic = upoly::generic_rank(F, std::move(polys), m.rows(), m.cols());
  const int kernel_rank = static_cast<int>(source.size() - generic);
  if (kernel_rank == 0) return {};

  // Every kernel summand O(b) maps nonzero into some O(source_j), so b <= max
  // source. The image has degree at most the sum of the positive targets, which
  // bounds deg N from below, and hence the smallest b as well.
  const int max_source = *std::max_element(source.begin(), source.end());
  std::int64_t lower = std::accumulate(source.begin(), source.end(), std::int64_t{0});
  for (int t : target) lower -= std::max(0, t);
  lower -= static_cast<std::int64_t>(source.size() - 1) * std::max(0, max_source);

  // h(j) = sum max(0, b_i + j + 1); h(j) - h(j-1) = #{i : b_i >= -j}.
  std::vector<int> degrees;
  std::size_t previous_h = 0;
  int previous_count = 0;
  for (std::int64_t j = -static_cast<std::int64_t>(max_source); j <= -lower; ++j) {
    const std::size_t h = probe_kernel_dimension(F, source, target, m, static_cast<int>(j));
    const int count = static_cast<int>(h) - static_cast<int>(previous_h);
    if (count < previous_count || count > kernel_rank) {
      throw std::logic_error("kernel_splitting: non-monotone twist probe at j=" + std::to_string(j));
    }
    degrees.insert(degrees.end(), static_cast<std::size_t>(count - previous_count), static_cast<int>(-j));
    if (count == kernel_rank) return SplittingType(std::move(degrees));
    previous_h = h;
    previous_count = count;
  }
  throw std::logic_error("kernel_splitting: twist probes did not stabilize inside the window");
}

void validate_section(const SplittingType& type, const Section& section) {
  if (section.size() != static_cast<std::size_t>(type.rank())) {
    throw std::invalid_argument("section has " + std::to_string(section.size()) + " components, bundle rank is " +
                                std::to_string(type.rank()));
  }
  for (std::size_t i = 0; i < section.size(); ++i) {
    const BinaryForm& f = section[i];
    if (f.degree() == type[i]) continue;
    if (f.is_zero() && (f.is_sentinel() || type[i] < 0)) continue;
    throw std::invalid_argument("section component " + std::to_string(i) + " has degree " +
                                std::to_string(f.degree()) + ", bundle summand has degree " + std::to_string(type[i]));
  }
}

SaturationResult saturate(const PrimeField& F, const SplittingType& type, std::span<const Section> sections) {
  for (const Section& s : sections) validate_section(type, s);
  if (sections.empty()) return {0, 0, type};

  const std::size_t n = static_cast<std::size_t>(type.rank());
  std::vector<int> source(n);
  for (std::size_t i = 0; i < n; ++i) source[i] = -type[i];
  const std::vector<int> target(sections.size(), 0);
  FormMatrix m(sections.size(), n);
  for (std::size_t r = 0; r < sections.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = sections[r][c];
  }
  const SplittingType annihilator = kernel_splitting(F, source, target, m);
  SaturationResult out;
  out.rank = type.rank() - annihilator.rank();
  out.degree = type.degree() + annihilator.degree();
  out.quotient = annihilator.dual();
  return out;
}

}  // namespace cohsys
