#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cohsys {

/// Splitting type (a_1 >= ... >= a_n) of E = O(a_1) + ... + O(a_n) on P^1.
/// Degrees are sorted non-increasing on construction. Rank 0 is allowed and
/// stands for the zero bundle (it shows up as kernels and quotients).
class SplittingType {
 public:
  SplittingType() = default;
  explicit SplittingType(std::vector<int> degrees);
  SplittingType(std::initializer_list<int> degrees) : SplittingType(std::vector<int>(degrees)) {}

  int rank() const noexcept { return static_cast<int>(degrees_.size()); }
  std::int64_t degree() const noexcept;
  std::span<const int> degrees() const noexcept { return degrees_; }
  int operator[](std::size_t i) const { return degrees_.at(i); }
  bool empty() const noexcept { return degrees_.empty(); }

  /// E^*: negated degrees, re-sorted.
  SplittingType dual() const;

  std::string to_string() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<int> degrees_;
};

/// Prefix sums a_1, a_1 + a_2, ..., of a sorted splitting type.
class HNPolygon {
 public:
  explicit HNPolygon(const SplittingType& type);
  std::span<const std::int64_t> prefix_sums() const noexcept { return prefix_; }
  /// Pointwise comparison of prefix sums (the polygon lies on or above `other`).
  /// Polygons of different length never dominate each other.
  bool dominates(const HNPolygon& other) const noexcept;

 private:
  std::vector<std::int64_t> prefix_;
};

}  // namespace cohsys
