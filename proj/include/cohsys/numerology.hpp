#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cohsys {

/// Integer invariants of a triple (n, d, k).
///
/// Two division conventions coexist and both are kept:
///   d = n a - t,       0 <= t < n      (used by the alpha bounds)
///   d = n a' + s,      0 <= s < n      (the generic splitting type)
/// and, when k < n,
///   k a - t = l (n - k) + m,  0 <= m < n - k.
struct Numerology {
  int n = 0;
  int d = 0;
  int k = 0;
  int a = 0;
  int t = 0;
  int a_floor = 0;
  int s = 0;
  std::optional<int> l;
  std::optional<int> m;
  std::int64_t beta = 0;
};

/// Throws std::invalid_argument unless n >= 2 and k >= 0.
Numerology decompose(int n, int d, int k);

/// -n^2 + 1 - k (k - d - n).
std::int64_t brill_noether(std::int64_t n, std::int64_t d, std::int64_t k);

/// Degrees d <= d_max of the form n(n-1) l + m n + t (n-1) with l > 0,
/// 0 <= t < n, 0 <= m < n-1: exactly those d for which some alpha admits
/// stable systems with one section. Sorted ascending.
std::vector<int> valid_degrees_k1(int n, int d_max);

}  // namespace cohsys
