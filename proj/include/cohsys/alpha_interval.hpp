#pragma once

#include <optional>
#include <string>

#include "cohsys/rational.hpp"

namespace cohsys {

/// Interval of the real line with exact rational endpoints. A missing lower
/// (upper) endpoint means -inf (+inf); infinite ends are always open. Every
/// empty interval is normalized to the single value AlphaInterval::empty().
class AlphaInterval {
 public:
  using Bound = std::optional<Rational>;

  static AlphaInterval empty() { return AlphaInterval(); }
  static AlphaInterval make(Bound lower, bool lower_open, Bound upper, bool upper_open);
  static AlphaInterval open(Bound lower, Bound upper) { return make(std::move(lower), true, std::move(upper), true); }
  static AlphaInterval closed(Rational lower, Rational upper) { return make(std::move(lower), false, std::move(upper), false); }
  static AlphaInterval real_line() { return open(std::nullopt, std::nullopt); }

  bool is_empty() const noexcept { return empty_; }
  const Bound& lower() const noexcept { return lower_; }
  const Bound& upper() const noexcept { return upper_; }
  bool lower_open() const noexcept { return lower_open_; }
  bool upper_open() const noexcept { return upper_open_; }
  bool is_open() const noexcept { return empty_ || (lower_open_ && upper_open_); }

  bool contains(const Rational& x) const;
  bool is_subset_of(const AlphaInterval& other) const;
  AlphaInterval intersect(const AlphaInterval& other) const;

  /// "(1,7/2)", "[1,3]", "(0,+inf)", "empty".
  std::string to_string() const;

  friend bool operator==(const AlphaInterval&, const AlphaInterval&) = default;

 private:
  AlphaInterval() = default;

  bool empty_ = true;
  Bound lower_;
  bool lower_open_ = true;
  Bound upper_;
  bool upper_open_ = true;
};

}  // namespace cohsys
