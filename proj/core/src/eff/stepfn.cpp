#include "platek/eff/stepfn.hpp"

#include <algorithm>

namespace platek::eff {

StepFn StepFn::make(std::vector<Rat> breakpoints, std::vector<Rat> piece_values,
                    std::vector<Rat> point_values) {
  if (breakpoints.size() < 2) throw Error("step function needs 0 and 1");
  if (breakpoints.front() != 0 || breakpoints.back() != 1)
    throw Error("step function breakpoints must start at 0 and end at 1");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw Error("step function breakpoints must be strictly increasing");
  if (piece_values.size() + 1 != breakpoints.size())
    throw Error("step function needs one piece value per open piece");
  if (point_values.size() != breakpoints.size())
    throw Error("step function needs one value per breakpoint");
  StepFn f;
  f.breaks_ = std::move(breakpoints);
  f.pieces_ = std::move(piece_values);
  f.points_ = std::move(point_values);
  return f;
}

StepFn StepFn::constant(const Rat& c) {
  return make({Rat(0), Rat(1)}, {c}, {c, c});
}

StepFn StepFn::indicator_closed(const Rat& a, const Rat& b) {
  if (a > b || a < 0 || b > 1) throw Error("bad indicator interval");
  std::vector<Rat> breaks, pieces, points;
  breaks.push_back(0);
  if (a != 0) breaks.push_back(a);
  if (b != a && b != 1) breaks.push_back(b);
  if (breaks.back() != 1) breaks.push_back(1);
  // derive piece/point values from membership of sample positions
  auto member = [&](const Rat& x) { return a <= x && x <= b; };
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    Rat mid = (breaks[i] + breaks[i + 1]) / 2;
    pieces.push_back(member(mid) ? 1 : 0);
  }
  for (const Rat& q : breaks) points.push_back(member(q) ? 1 : 0);
  return make(std::move(breaks), std::move(pieces), std::move(points));
}

std::optional<std::size_t> StepFn::break_index(const Rat& x) const {
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
  if (it != breaks_.end() && *it == x)
    return static_cast<std::size_t>(it - breaks_.begin());
  return std::nullopt;
}

std::optional<std::size_t> StepFn::piece_of(const Rat& x) const {
  if (x <= 0 || x >= 1) return std::nullopt;
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  std::size_t idx = static_cast<std::size_t>(it - breaks_.begin());
  // breaks_[idx-1] <= x < breaks_[idx]
  if (breaks_[idx - 1] == x) return std::nullopt;  // a breakpoint
  return idx - 1;
}

Rat StepFn::eval(const Rat& x) const {
  if (x < 0 || x > 1) throw Error("step function evaluated outside [0,1]");
  if (auto b = break_index(x)) return points_[*b];
  return pieces_[*piece_of(x)];
}

Rat StepFn::left_limit(const Rat& x) const {
  if (!(x > 0)) throw Error("left limit at 0");
  // the piece immediately to the left: (q_{i}, q_{i+1}) with q_{i} < x <= q_{i+1}
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
  std::size_t idx = static_cast<std::size_t>(it - breaks_.begin());
  // breaks_[idx-1] < x <= breaks_[idx]
  return pieces_[idx - 1];
}

Rat StepFn::right_limit(const Rat& x) const {
  if (!(x < 1)) throw Error("right limit at 1");
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  std::size_t idx = static_cast<std::size_t>(it - breaks_.begin());
  // breaks_[idx-1] <= x < breaks_[idx]
  return pieces_[idx - 1];
}

Rat StepFn::sup_on(const Rat& p, const Rat& q) const {
  if (p > q || p < 0 || q > 1) throw Error("bad interval for sup_on");
  if (p == q) return eval(p);
  std::optional<Rat> best;
  auto consider = [&](const Rat& v) {
    if (!best || v > *best) best = v;
  };
  for (std::size_t i = 0; i < breaks_.size(); ++i)
    if (p <= breaks_[i] && breaks_[i] <= q) consider(points_[i]);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    // open piece (breaks_[i], breaks_[i+1]) meets [p,q] in an interval
    // with interior iff lo < q and p < hi
    if (breaks_[i] < q && p < breaks_[i + 1]) consider(pieces_[i]);
  }
  return *best;
}

Rat StepFn::inf_on(const Rat& p, const Rat& q) const {
  if (p > q || p < 0 || q > 1) throw Error("bad interval for inf_on");
  if (p == q) return eval(p);
  std::optional<Rat> best;
  auto consider = [&](const Rat& v) {
    if (!best || v < *best) best = v;
  };
  for (std::size_t i = 0; i < breaks_.size(); ++i)
    if (p <= breaks_[i] && breaks_[i] <= q) consider(points_[i]);
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (breaks_[i] < q && p < breaks_[i + 1]) consider(pieces_[i]);
  return *best;
}

Rat StepFn::osc_interval(const Rat& a, const Rat& b) const {
  return sup_on(a, b) - inf_on(a, b);
}

Rat StepFn::osc_point(const Rat& x) const {
  // Once the ball sits inside the two adjacent pieces the oscillation
  // stabilizes at max - min over {f(x), left limit, right limit}.
  Rat lo = eval(x), hi = lo;
  if (x > 0) {
    Rat l = left_limit(x);
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  if (x < 1) {
    Rat r = right_limit(x);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return hi - lo;
}

std::vector<Rat> StepFn::jump_set(const Rat& q) const {
  if (!(q > 0)) throw Error("jump_set needs q > 0");
  std::vector<Rat> out;
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    const Rat& x = breaks_[i];
    std::optional<Rat> liminf;
    if (x > 0) liminf = left_limit(x);
    if (x < 1) {
      Rat r = right_limit(x);
      if (!liminf || r < *liminf) liminf = r;
    }
    if (liminf && *liminf <= points_[i] - q) out.push_back(x);
  }
  return out;
}

bool StepFn::is_usco() const {
  // Upper semi-continuity of a step function fails only where a
  // breakpoint value drops below an adjacent piece value.
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    const Rat& x = breaks_[i];
    if (x > 0 && points_[i] < left_limit(x)) return false;
    if (x < 1 && points_[i] < right_limit(x)) return false;
  }
  return true;
}

Rat StepFn::variation() const {
  // Every partition refines into the canonical one: breakpoints plus one
  // interior sample per piece.  Crossing piece i contributes
  // |w_{i} - v_i| + |v_i - w_{i+1}|.
  Rat total = 0;
  auto absr = [](const Rat& r) { return r < 0 ? Rat(-r) : r; };
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    total += absr(points_[i] - pieces_[i]);
    total += absr(pieces_[i] - points_[i + 1]);
  }
  return total;
}

Rat StepFn::max_value() const {
  Rat best = points_[0];
  for (const Rat& v : points_) best = std::max(best, v);
  for (const Rat& v : pieces_) best = std::max(best, v);
  return best;
}

Rat StepFn::min_value() const {
  Rat best = points_[0];
  for (const Rat& v : points_) best = std::min(best, v);
  for (const Rat& v : pieces_) best = std::min(best, v);
  return best;
}

bool StepFn::level_set_nonempty(const Rat& r) const {
  for (const Rat& v : points_)
    if (v >= r) return true;
  for (const Rat& v : pieces_)
    if (v >= r) return true;
  return false;
}

std::string StepFn::to_string() const {
  std::string out = "stepfn{breaks[";
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (i) out += ",";
    out += rat_str(breaks_[i]);
  }
  out += "] pieces[";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += ",";
    out += rat_str(pieces_[i]);
  }
  out += "] points[";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out += ",";
    out += rat_str(points_[i]);
  }
  out += "]}";
  return out;
}

}  // namespace platek::eff
