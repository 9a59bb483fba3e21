#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "platek/eff/rational.hpp"
#include "platek/errors.hpp"

namespace platek::eff {

/// A clopen subset of Cantor space: a depth d and the sorted set of
/// length-d prefixes whose cylinders make up the set.  Always canonical:
/// the empty set has depth 0 and no leaves, and no representation of a
/// smaller depth describes the same set.
class ClopenSet {
 public:
  ClopenSet() = default;  // empty

  static ClopenSet empty() { return ClopenSet(); }
  static ClopenSet full();
  /// Validates (lengths, characters, duplicates) and canonicalizes.
  static ClopenSet from_leaves(std::size_t depth,
                               std::vector<std::string> leaves);
  /// The cylinder of all sequences extending the prefix.
  static ClopenSet cylinder(const std::string& prefix);

  std::size_t depth() const { return depth_; }
  const std::vector<std::string>& leaves() const { return leaves_; }

  bool is_empty() const { return leaves_.empty(); }
  bool is_full() const { return depth_ == 0 && leaves_.size() == 1; }

  /// Membership of the eventually-zero point prefix + 000...
  bool member(const std::vector<std::uint8_t>& point_prefix) const;

  /// Same set re-expressed with leaves of length new_depth >= depth().
  std::vector<std::string> leaves_at(std::size_t new_depth) const;

  static ClopenSet set_union(const ClopenSet& a, const ClopenSet& b);
  static ClopenSet set_intersect(const ClopenSet& a, const ClopenSet& b);
  ClopenSet complement() const;
  bool subset_of(const ClopenSet& other) const;
  bool operator==(const ClopenSet& other) const {
    return depth_ == other.depth_ && leaves_ == other.leaves_;
  }

  /// Lexicographically least member as a depth-length prefix (the point
  /// is the prefix followed by zeros).  Throws EmptySetError when empty.
  std::string lex_least() const;

  /// Coin-flip measure |leaves| / 2^depth.
  Rat measure() const;
  /// Measure of the intersection with the cylinder of the given prefix.
  Rat measure_in_cylinder(const std::string& prefix) const;

 private:
  std::size_t depth_ = 0;
  std::vector<std::string> leaves_;  // sorted, distinct, length == depth_
  void canonicalize();
};

}  // namespace platek::eff
