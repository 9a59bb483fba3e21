#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "platek/eff/rational.hpp"

namespace platek::eff {

/// One interval inside [0,1] with exact rational endpoints and
/// open/closed flags.  Degenerate [a,a] with both ends closed is a point.
struct Interval {
  Rat lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool is_empty() const {
    if (lo > hi) return true;
    if (lo == hi) return !(lo_closed && hi_closed);
    return false;
  }
  bool contains(const Rat& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
  }
  std::string to_string() const;
};

/// A finite union of disjoint, non-adjacent intervals in [0,1], kept
/// normalized (sorted, merged).  All arithmetic is exact.
class IntervalUnion {
 public:
  IntervalUnion() = default;  // empty

  static IntervalUnion empty() { return IntervalUnion(); }
  static IntervalUnion unit();  // [0,1]
  /// Normalizes: drops empties, sorts, merges overlaps and adjacencies.
  /// Endpoints outside [0,1] are rejected.
  static IntervalUnion of(std::vector<Interval> parts);
  /// Rejects non-normalized input instead of fixing it; the error message
  /// carries the normalized form as a hint.  Used by the file parser.
  static IntervalUnion of_normalized(std::vector<Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  std::size_t components() const { return parts_.size(); }
  bool is_empty() const { return parts_.empty(); }
  bool all_closed() const;

  bool contains(const Rat& x) const;
  Rat measure() const;
  /// inf distance to the set; throws EmptySetError on the empty union.
  Rat distance(const Rat& x) const;

  IntervalUnion complement_in_unit() const;
  static IntervalUnion set_union(const IntervalUnion& a, const IntervalUnion& b);
  static IntervalUnion set_intersect(const IntervalUnion& a,
                                     const IntervalUnion& b);

  bool operator==(const IntervalUnion& other) const;
  std::string to_string() const;

 private:
  std::vector<Interval> parts_;
};

}  // namespace platek::eff
