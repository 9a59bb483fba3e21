#include "platek/eff/clopen.hpp"

#include <algorithm>

namespace platek::eff {

ClopenSet ClopenSet::full() {
  ClopenSet s;
  s.depth_ = 0;
  s.leaves_ = {""};
  return s;
}

ClopenSet ClopenSet::from_leaves(std::size_t depth,
                                 std::vector<std::string> leaves) {
  for (const std::string& l : leaves) {
    if (l.size() != depth)
      throw Error("clopen leaf '" + l + "' does not have length " +
                  std::to_string(depth));
    for (char c : l)
      if (c != '0' && c != '1')
        throw Error("clopen leaf '" + l + "' contains a character besides 0/1");
  }
  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  ClopenSet s;
  s.depth_ = depth;
  s.leaves_ = std::move(leaves);
  s.canonicalize();
  return s;
}

ClopenSet ClopenSet::cylinder(const std::string& prefix) {
  return from_leaves(prefix.size(), {prefix});
}

void ClopenSet::canonicalize() {
  if (leaves_.empty()) {
    depth_ = 0;
    return;
  }
  // Merge sibling pairs while every leaf's sibling is present.
  while (depth_ > 0) {
    if (leaves_.size() % 2 != 0) return;
    bool pairable = true;
    for (std::size_t i = 0; i < leaves_.size(); i += 2) {
      const std::string& a = leaves_[i];
      const std::string& b = leaves_[i + 1];
      if (a.compare(0, depth_ - 1, b, 0, depth_ - 1) != 0 ||
          a.back() != '0' || b.back() != '1') {
        pairable = false;
        break;
      }
    }
    if (!pairable) return;
    std::vector<std::string> merged;
    merged.reserve(leaves_.size() / 2);
    for (std::size_t i = 0; i < leaves_.size(); i += 2)
      merged.push_back(leaves_[i].substr(0, depth_ - 1));
    leaves_ = std::move(merged);
    --depth_;
  }
}

bool ClopenSet::member(const std::vector<std::uint8_t>& point_prefix) const {
  std::string key;
  key.reserve(depth_);
  for (std::size_t i = 0; i < depth_; ++i) {
    std::uint8_t bit = i < point_prefix.size() ? point_prefix[i] : 0;
    key += bit ? '1' : '0';
  }
  return std::binary_search(leaves_.begin(), leaves_.end(), key);
}

std::vector<std::string> ClopenSet::leaves_at(std::size_t new_depth) const {
  if (new_depth < depth_) throw Error("leaves_at below the set's depth");
  std::vector<std::string> out;
  std::size_t extra = new_depth - depth_;
  if (extra > 24) throw Error("clopen refinement too deep");
  for (const std::string& l : leaves_) {
    // append all binary suffixes of length extra, in order
    std::uint64_t count = 1ULL << extra;
    for (std::uint64_t s = 0; s < count; ++s) {
      std::string e = l;
      for (std::size_t b = 0; b < extra; ++b)
        e += ((s >> (extra - 1 - b)) & 1) ? '1' : '0';
      out.push_back(std::move(e));
    }
  }
  return out;  // still sorted: suffix expansion preserves order
}

ClopenSet ClopenSet::set_union(const ClopenSet& a, const ClopenSet& b) {
  std::size_t d = std::max(a.depth_, b.depth_);
  std::vector<std::string> la = a.leaves_at(d);
  std::vector<std::string> lb = b.leaves_at(d);
  std::vector<std::string> merged;
  std::set_union(la.begin(), la.end(), lb.begin(), lb.end(),
                 std::back_inserter(merged));
  ClopenSet s;
  s.depth_ = d;
  s.leaves_ = std::move(merged);
  s.canonicalize();
  return s;
}

ClopenSet ClopenSet::set_intersect(const ClopenSet& a, const ClopenSet& b) {
  std::size_t d = std::max(a.depth_, b.depth_);
  std::vector<std::string> la = a.leaves_at(d);
  std::vector<std::string> lb = b.leaves_at(d);
  std::vector<std::string> merged;
  std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(),
                        std::back_inserter(merged));
  ClopenSet s;
  s.depth_ = d;
  s.leaves_ = std::move(merged);
  s.canonicalize();
  return s;
}

ClopenSet ClopenSet::complement() const {
  if (depth_ > 24) throw Error("clopen complement too deep");
  std::vector<std::string> all;
  std::uint64_t count = 1ULL << depth_;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::string l;
    for (std::size_t b = 0; b < depth_; ++b)
      l += ((i >> (depth_ - 1 - b)) & 1) ? '1' : '0';
    all.push_back(std::move(l));
  }
  std::vector<std::string> diff;
  std::set_difference(all.begin(), all.end(), leaves_.begin(), leaves_.end(),
                      std::back_inserter(diff));
  ClopenSet s;
  s.depth_ = depth_;
  s.leaves_ = std::move(diff);
  s.canonicalize();
  return s;
}

bool ClopenSet::subset_of(const ClopenSet& other) const {
  std::size_t d = std::max(depth_, other.depth_);
  std::vector<std::string> la = leaves_at(d);
  std::vector<std::string> lb = other.leaves_at(d);
  return std::includes(lb.begin(), lb.end(), la.begin(), la.end());
}

std::string ClopenSet::lex_least() const {
  if (leaves_.empty()) throw EmptySetError("lex_least of the empty set");
  return leaves_.front();
}

Rat ClopenSet::measure() const {
  Int den = Int(1) << depth_;
  return Rat(Int(leaves_.size()), den);
}

Rat ClopenSet::measure_in_cylinder(const std::string& prefix) const {
  for (char c : prefix)
    if (c != '0' && c != '1') throw Error("bad cylinder prefix");
  if (prefix.size() >= depth_) {
    std::string head = prefix.substr(0, depth_);
    if (std::binary_search(leaves_.begin(), leaves_.end(), head))
      return pow2_inv(static_cast<unsigned>(prefix.size()));
    return Rat(0);
  }
  // Count leaves extending the prefix.
  std::size_t count = 0;
  for (const std::string& l : leaves_)
    if (l.compare(0, prefix.size(), prefix) == 0) ++count;
  Int den = Int(1) << depth_;
  return Rat(Int(count), den);
}

}  // namespace platek::eff
