#include "cohsys/alpha_interval.hpp"

namespace cohsys {

AlphaInterval AlphaInterval::make(Bound lower, bool lower_open, Bound upper, bool upper_open) {
  if (!lower) lower_open = true;
  if (!upper) upper_open = true;
  if (lower && upper) {
    if (*lower > *upper) return empty();
    if (*lower == *upper && (lower_open || upper_open)) return empty();
  }
  AlphaInterval out;
  out.empty_ = false;
  out.lower_ = std::move(lower);
  out.lower_open_ = lower_open;
  out.upper_ = std::move(upper);
  out.upper_open_ = upper_open;
  return out;
}

bool AlphaInterval::contains(const Rational& x) const {
  if (empty_) return false;
  if (lower_ && (lower_open_ ? x <= *lower_ : x < *lower_)) return false;
  if (upper_ && (upper_open_ ? x >= *upper_ : x > *upper_)) return false;
  return true;
}

bool AlphaInterval::is_subset_of(const AlphaInterval& other) const {
  if (empty_) return true;
  if (other.empty_) return false;
  if (other.lower_) {
    if (!lower_) return false;
    if (*lower_ < *other.lower_) return false;
    if (*lower_ == *other.lower_ && other.lower_open_ && !lower_open_) return false;
  }
  if (other.upper_) {
    if (!upper_) return false;
    if (*upper_ > *other.upper_) return false;
    if (*upper_ == *other.upper_ && other.upper_open_ && !upper_open_) return false;
  }
  return true;
}

AlphaInterval AlphaInterval::intersect(const AlphaInterval& other) const {
  if (empty_ || other.empty_) return empty();
  Bound lo = lower_;
  bool lo_open = lower_open_;
  if (other.lower_ && (!lo || *other.lower_ > *lo || (*other.lower_ == *lo && other.lower_open_))) {
    lo = other.lower_;
    lo_open = other.lower_open_ || (lower_ && *lower_ == *other.lower_ && lower_open_);
  }
  Bound hi = upper_;
  bool hi_open = upper_open_;
  if (other.upper_ && (!hi || *other.upper_ < *hi || (*other.upper_ == *hi && other.upper_open_))) {
    hi = other.upper_;
    hi_open = other.upper_open_ || (upper_ && *upper_ == *other.upper_ && upper_open_);
  }
  return make(std::move(lo), lo_open, std::move(hi), hi_open);
}

std::string AlphaInterval::to_string() const {
  if (empty_) return "empty";
  std::string s = lower_open_ ? "(" : "[";
  s += lower_ ? cohsys::to_string(*lower_) : "-inf";
  s += ",";
  s += upper_ ? cohsys::to_string(*upper_) : "+inf";
  s += upper_open_ ? ")" : "]";
  return s;
}

}  // namespace cohsys
