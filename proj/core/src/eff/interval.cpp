#include "platek/eff/interval.hpp"

#include <algorithm>

namespace platek::eff {

std::string Interval::to_string() const {
  std::string out = lo_closed ? "[" : "(";
  out += rat_str(lo) + "," + rat_str(hi);
  out += hi_closed ? "]" : ")";
  return out;
}

IntervalUnion IntervalUnion::unit() {
  Interval i;
  i.lo = 0;
  i.hi = 1;
  return of({i});
}

IntervalUnion IntervalUnion::of(std::vector<Interval> parts) {
  std::vector<Interval> kept;
  for (Interval& p : parts) {
    if (p.lo < 0 || p.hi > 1)
      throw Error("interval " + p.to_string() + " leaves [0,1]");
    if (p.is_empty()) continue;
    kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.lo_closed != b.lo_closed) return a.lo_closed;  // closed end first
    return a.hi < b.hi;
  });
  std::vector<Interval> merged;
  for (const Interval& p : kept) {
    if (merged.empty()) {
      merged.push_back(p);
      continue;
    }
    Interval& last = merged.back();
    bool joinable = false;
    if (p.lo < last.hi) {
      joinable = true;
    } else if (p.lo == last.hi && (p.lo_closed || last.hi_closed)) {
      // touching endpoints with no gap point
      joinable = true;
    }
    if (!joinable) {
      merged.push_back(p);
      continue;
    }
    if (p.hi > last.hi) {
      last.hi = p.hi;
      last.hi_closed = p.hi_closed;
    } else if (p.hi == last.hi) {
      last.hi_closed = last.hi_closed || p.hi_closed;
    }
    if (p.lo == last.lo) last.lo_closed = last.lo_closed || p.lo_closed;
  }
  IntervalUnion u;
  u.parts_ = std::move(merged);
  return u;
}

IntervalUnion IntervalUnion::of_normalized(std::vector<Interval> parts) {
  IntervalUnion normalized = of(parts);
  bool same = normalized.parts_.size() == parts.size();
  if (same) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Interval& a = parts[i];
      const Interval& b = normalized.parts_[i];
      if (a.lo != b.lo || a.hi != b.hi || a.lo_closed != b.lo_closed ||
          a.hi_closed != b.hi_closed) {
        same = false;
        break;
      }
    }
  }
  if (!same)
    throw Error("interval union is not normalized; write it as " +
                normalized.to_string());
  return normalized;
}

bool IntervalUnion::all_closed() const {
  for (const Interval& p : parts_)
    if (!p.lo_closed || !p.hi_closed) return false;
  return true;
}

bool IntervalUnion::contains(const Rat& x) const {
  for (const Interval& p : parts_)
    if (p.contains(x)) return true;
  return false;
}

Rat IntervalUnion::measure() const {
  Rat total = 0;
  for (const Interval& p : parts_) total += p.hi - p.lo;
  return total;
}

Rat IntervalUnion::distance(const Rat& x) const {
  if (parts_.empty())
    throw EmptySetError("distance to the empty union is undefined");
  Rat best(-1);
  for (const Interval& p : parts_) {
    Rat d;
    if (x < p.lo)
      d = p.lo - x;
    else if (x > p.hi)
      d = x - p.hi;
    else
      d = 0;  // inside or at an endpoint; inf over the set is 0 either way
    if (best < 0 || d < best) best = d;
  }
  return best;
}

IntervalUnion IntervalUnion::complement_in_unit() const {
  std::vector<Interval> out;
  Rat cursor = 0;
  bool cursor_closed = true;  // [0 is available from the left
  for (const Interval& p : parts_) {
    Interval gap;
    gap.lo = cursor;
    gap.lo_closed = cursor_closed;
    gap.hi = p.lo;
    gap.hi_closed = !p.lo_closed;
    if (!gap.is_empty()) out.push_back(gap);
    cursor = p.hi;
    cursor_closed = !p.hi_closed;
  }
  Interval tail;
  tail.lo = cursor;
  tail.lo_closed = cursor_closed;
  tail.hi = 1;
  tail.hi_closed = true;
  if (!tail.is_empty()) out.push_back(tail);
  return of(std::move(out));
}

IntervalUnion IntervalUnion::set_union(const IntervalUnion& a,
                                       const IntervalUnion& b) {
  std::vector<Interval> parts = a.parts_;
  parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
  return of(std::move(parts));
}

IntervalUnion IntervalUnion::set_intersect(const IntervalUnion& a,
                                           const IntervalUnion& b) {
  std::vector<Interval> out;
  for (const Interval& p : a.parts_) {
    for (const Interval& q : b.parts_) {
      Interval r;
      if (p.lo > q.lo) {
        r.lo = p.lo;
        r.lo_closed = p.lo_closed;
      } else if (q.lo > p.lo) {
        r.lo = q.lo;
        r.lo_closed = q.lo_closed;
      } else {
        r.lo = p.lo;
        r.lo_closed = p.lo_closed && q.lo_closed;
      }
      if (p.hi < q.hi) {
        r.hi = p.hi;
        r.hi_closed = p.hi_closed;
      } else if (q.hi < p.hi) {
        r.hi = q.hi;
        r.hi_closed = q.hi_closed;
      } else {
        r.hi = p.hi;
        r.hi_closed = p.hi_closed && q.hi_closed;
      }
      if (!r.is_empty()) out.push_back(r);
    }
  }
  return of(std::move(out));
}

bool IntervalUnion::operator==(const IntervalUnion& other) const {
  if (parts_.size() != other.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const Interval& a = parts_[i];
    const Interval& b = other.parts_[i];
    if (a.lo != b.lo || a.hi != b.hi || a.lo_closed != b.lo_closed ||
        a.hi_closed != b.hi_closed)
      return false;
  }
  return true;
}

std::string IntervalUnion::to_string() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " ";
    out += parts_[i].to_string();
  }
  return out;
}

}  // namespace platek::eff
