#include "cohsys/splitting_type.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cohsys {

SplittingType::SplittingType(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

std::int64_t SplittingType::degree() const noexcept {
  return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
}

SplittingType SplittingType::dual() const {
  std::vector<int> d(degrees_.size());
  std::transform(degrees_.begin(), degrees_.end(), d.begin(), [](int a) { return -a; });
  return SplittingType(std::move(d));
}

std::string SplittingType::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees_[i]);
  }
  return s + ")";
}

HNPolygon::HNPolygon(const SplittingType& type) {
  std::int64_t acc = 0;
  for (int a : type.degrees()) {
    acc += a;
    prefix_.push_back(acc);
  }
}

bool HNPolygon::dominates(const HNPolygon& other) const noexcept {
  if (prefix_.size() != other.prefix_.size()) return false;
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i] < other.prefix_[i]) return false;
  }
  return true;
}

}  // namespace cohsys
