#include "cohsys/numerology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cohsys {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Numerology decompose(int n, int d, int k) {
  if (n < 2) throw std::invalid_argument("decompose needs n >= 2");
  if (k < 0) throw std::invalid_argument("decompose needs k >= 0");
  Numerology out;
  out.n = n;
  out.d = d;
  out.k = k;
  out.a_floor = floor_div(d, n);
  out.s = d - out.a_floor * n;
  out.a = out.s == 0 ? out.a_floor : out.a_floor + 1;
  out.t = n * out.a - d;
  if (k < n) {
    const int lhs = k * out.a - out.t;
    out.l = floor_div(lhs, n - k);
    out.m = lhs - *out.l * (n - k);
  }
  out.beta = brill_noether(n, d, k);
  return out;
}

std::int64_t brill_noether(std::int64_t n, std::int64_t d, std::int64_t k) { return -n * n + 1 - k * (k - d - n); }

std::vector<int> valid_degrees_k1(int n, int d_max) {
  if (n < 2) throw std::invalid_argument("valid_degrees_k1 needs n >= 2");
  std::set<int> found;
  const int step = n * (n - 1);
  for (int l = 1; step * l <= d_max; ++l) {
    for (int m = 0; m < n - 1; ++m) {
      for (int t = 0; t < n; ++t) {
        const int d = step * l + m * n + t * (n - 1);
        if (d <= d_max) found.insert(d);
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace cohsys
