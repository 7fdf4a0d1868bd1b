#include "cohsys/subspaces.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cohsys {

std::uint64_t gaussian_binomial(int k, int w, std::uint64_t q) {
  if (w < 0 || w > k) return 0;
  // Row w of the q-Pascal triangle: [k, w] = [k-1, w-1] + q^w [k-1, w].
  std::vector<unsigned __int128> row(static_cast<std::size_t>(w) + 1, 0);
  row[0] = 1;
  const unsigned __int128 limit = ~std::uint64_t{0};
  for (int kk = 1; kk <= k; ++kk) {
    for (int ww = std::min(kk, w); ww >= 1; --ww) {
      unsigned __int128 qp = 1;
      for (int i = 0; i < ww; ++i) {
        qp *= q;
        if (qp > limit) throw std::overflow_error("gaussian binomial overflows 64 bits");
      }
      const unsigned __int128 v = row[static_cast<std::size_t>(ww) - 1] + qp * row[static_cast<std::size_t>(ww)];
      if (v > limit) throw std::overflow_error("gaussian binomial overflows 64 bits");
      row[static_cast<std::size_t>(ww)] = v;
    }
  }
  return static_cast<std::uint64_t>(row[static_cast<std::size_t>(w)]);
}

bool for_each_subspace(const PrimeField& F, int k, int w, const std::function<bool(const FieldMatrix&)>& visit) {
  if (w < 0 || w > k) throw std::invalid_argument("subspace dimension out of range");
  const auto uk = static_cast<std::size_t>(k);
  const auto uw = static_cast<std::size_t>(w);
  std::vector<int> pivots(uw);
  for (std::size_t i = 0; i < uw; ++i) pivots[i] = static_cast<int>(i);

  while (true) {
    std::vector<bool> is_pivot(uk, false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < uw; ++r) {
      for (std::size_t c = static_cast<std::size_t>(pivots[r]) + 1; c < uk; ++c) {
        if (!is_pivot[c]) free.emplace_back(r, c);
      }
    }
    FieldMatrix basis(F, uw, uk);
    for (std::size_t r = 0; r < uw; ++r) basis(r, static_cast<std::size_t>(pivots[r])) = 1;
    while (true) {
      if (visit(basis)) return true;
      std::size_t i = free.size();
      while (i > 0) {
        auto [r, c] = free[i - 1];
        if (++basis(r, c) < F.modulus()) break;
        basis(r, c) = 0;
        --i;
      }
      if (i == 0) break;
    }

    int i = w - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == k - w + i) --i;
    if (i < 0) return false;
    ++pivots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < w; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace cohsys
