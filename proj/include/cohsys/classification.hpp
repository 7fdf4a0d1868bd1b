#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohsys/alpha_interval.hpp"

namespace cohsys {

enum class Status { ExactNonEmpty, Empty, NecessaryOnly, PartiallyKnown };

std::string_view to_string(Status status);

struct SemistableNote {
  AlphaInterval interval;
  std::string text;
};

/// Non-emptiness verdict for the moduli of alpha-stable coherent systems of
/// type (n, d, k) on P^1.
///
/// `stable_interval` depends on the status:
///   ExactNonEmpty  - the exact set of alpha with non-empty moduli;
///   Empty          - empty (emptiness is proven for every alpha);
///   NecessaryOnly  - the necessary region, an outer bound;
///   PartiallyKnown - the sharpest proven outer bound.
/// `sufficient_region` holds alpha proven to give non-empty moduli, and
/// `lower_endpoint_bounds` brackets an undetermined lower endpoint.
struct Verdict {
  int n = 0;
  int d = 0;
  int k = 0;
  std::int64_t beta = 0;
  Status status = Status::NecessaryOnly;
  AlphaInterval stable_interval = AlphaInterval::empty();
  AlphaInterval necessary_region = AlphaInterval::empty();
  AlphaInterval sufficient_region = AlphaInterval::empty();
  std::optional<AlphaInterval> lower_endpoint_bounds;
  std::vector<SemistableNote> semistable_notes;
  std::vector<std::string> notes;
  std::string rule;
};

/// Intersection of the general necessary conditions: alpha > max(0, t/k),
/// alpha < d/(n-k) - m n/(k(n-k)) when k < n, d > 0 and beta >= 0.
/// Throws std::invalid_argument unless n >= 2 and k >= 1.
AlphaInterval necessary_region(int n, int d, int k);

/// Throws std::invalid_argument unless n >= 2 and k >= 1.
Verdict classify(int n, int d, int k);

struct CrossCheckItem {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool agree = false;
};

struct CrossCheckReport {
  int n = 0;
  int d = 0;
  std::vector<CrossCheckItem> checks;
  std::vector<std::string> flags;
  bool all_agree() const;
};

/// Compares the case formulas that overlap at (n, d) and flags exceptional pairs.
CrossCheckReport cross_check(int n, int d);

}  // namespace cohsys
