#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlc {

/// A real number or one of the two infinities. NaN is rejected.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  ExtendedReal(double v) : v_(v) {  // NOLINT: implicit from double is intended
    if (std::isnan(v)) throw std::invalid_argument("ExtendedReal: NaN");
  }

  static ExtendedReal neg_inf() { return {-std::numeric_limits<double>::infinity()}; }
  static ExtendedReal pos_inf() { return {std::numeric_limits<double>::infinity()}; }

  double value() const { return v_; }
  bool is_finite() const { return std::isfinite(v_); }

  friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(ExtendedReal a, ExtendedReal b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  double v_ = 0.0;
};

/// Half-open interval ]lo, hi]. lo == hi is the empty interval.
class Interval {
 public:
  Interval() = default;
  Interval(ExtendedReal lo, ExtendedReal hi) : lo_(lo), hi_(hi) {
    if (hi < lo) throw std::invalid_argument("Interval: hi < lo");
  }

  static Interval all() { return {ExtendedReal::neg_inf(), ExtendedReal::pos_inf()}; }
  static Interval up_to(double hi) { return {ExtendedReal::neg_inf(), hi}; }
  static Interval above(double lo) { return {lo, ExtendedReal::pos_inf()}; }

  ExtendedReal lo() const { return lo_; }
  ExtendedReal hi() const { return hi_; }
  bool empty() const { return lo_ == hi_; }

  bool contains(double x) const { return lo_.value() < x && x <= hi_.value(); }
  bool contains(const Interval& o) const { return o.empty() || (lo_ <= o.lo_ && o.hi_ <= hi_); }

  Interval intersect(const Interval& o) const {
    ExtendedReal lo = std::max(lo_, o.lo_);
    ExtendedReal hi = std::min(hi_, o.hi_);
    if (hi < lo) return {lo, lo};
    return {lo, hi};
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  ExtendedReal lo_;
  ExtendedReal hi_;
};

std::string to_string(const Interval& iv);

/// Canonical finite union of half-open intervals: sorted, nonempty,
/// pairwise disjoint and non-touching (]a,b] ∪ ]b,c] is stored as ]a,c]).
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Accepts arbitrary (overlapping, unsorted, empty) pieces and normalizes.
  explicit IntervalSet(std::vector<Interval> pieces);

  const std::vector<Interval>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool contains(double x) const;

  /// Builds a canonical set from consecutive breakpoints and a membership
  /// flag per elementary interval ]breaks[i], breaks[i+1]].
  static IntervalSet from_mask(const std::vector<double>& breaks, const std::vector<char>& mask);

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> pieces_;
};

/// Sorted unique breakpoints, always including -inf and +inf.
std::vector<double> breakpoints_with_infinities(std::vector<double> pts);

/// Index range [first, last) of elementary intervals of `breaks` covered by iv.
/// Every endpoint of iv must be a breakpoint.
std::pair<std::size_t, std::size_t> covered_span(const std::vector<double>& breaks, const Interval& iv);

}  // namespace nlc
