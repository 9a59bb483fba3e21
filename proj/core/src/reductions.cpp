#include "platek/reductions.hpp"

#include <algorithm>
#include <set>

namespace platek::reductions {

std::vector<std::pair<Rat, Rat>> rm_code_open(
    const IntervalUnion& open_set, std::uint64_t denom_bound,
    const ClosedEmptinessOracle& oracle) {
  if (denom_bound < 1) throw Error("denominator bound must be at least 1");
  // all rationals in [0,1] with denominator <= bound
  std::set<Rat> grid;
  for (std::uint64_t q = 1; q <= denom_bound; ++q)
    for (std::uint64_t p = 0; p <= q; ++p) grid.insert(Rat(eff::Int(p), eff::Int(q)));
  std::vector<Rat> points(grid.begin(), grid.end());

  IntervalUnion closed_complement = open_set.complement_in_unit();
  std::vector<std::pair<Rat, Rat>> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Rat& p = points[i];
      const Rat& q = points[j];
      // (p,q) subset of O iff (p,q) misses the closed complement
      eff::Interval pq;
      pq.lo = p;
      pq.lo_closed = false;
      pq.hi = q;
      pq.hi_closed = false;
      IntervalUnion probe =
          IntervalUnion::set_intersect(closed_complement, IntervalUnion::of({pq}));
      if (oracle.is_empty(probe)) out.emplace_back(p, q);
    }
  }
  return out;
}

Rat sup_usco(const StepFn& f, unsigned k, const LevelSetOracle& oracle,
             std::vector<std::pair<Rat, bool>>* transcript) {
  if (!f.is_usco())
    throw PreconditionError("sup_usco requires an upper semi-continuous input");
  auto query = [&](const Rat& r) {
    bool res = oracle.nonempty(f, r);
    if (transcript) transcript->emplace_back(r, res);
    return res;
  };
  // Invariant: {f >= lo} non-empty, {f >= hi} empty.
  Rat lo = f.min_value();
  Rat hi = f.max_value() + 1;
  if (!query(lo)) throw Error("level set at the minimum value is empty");
  Rat width = hi - lo;
  Rat target = eff::pow2_inv(k);
  while (width > target) {
    Rat mid = (lo + hi) / 2;
    if (query(mid))
      lo = mid;
    else
      hi = mid;
    width = hi - lo;
  }
  return lo;
}

std::vector<std::uint8_t> select_clopen(const ClopenSet& set,
                                        const ClopenEmptinessOracle& oracle) {
  if (set.is_empty()) throw EmptySetError("select on the empty set");
  std::vector<std::uint8_t> bits;
  std::string prefix;
  for (std::size_t level = 0; level < set.depth(); ++level) {
    prefix.push_back('0');
    ClopenSet zero_branch =
        ClopenSet::set_intersect(set, ClopenSet::cylinder(prefix));
    ++oracle.queries;
    if (!oracle.is_empty(zero_branch)) {
      bits.push_back(0);
    } else {
      bits.push_back(1);
      prefix.back() = '1';
    }
  }
  return bits;
}

Rat moreau_env(const StepFn& f, std::uint64_t n, const Rat& x) {
  if (x < 0 || x > 1) throw Error("moreau_env evaluated outside [0,1]");
  Rat nn(n);
  auto absr = [](const Rat& r) { return r < 0 ? Rat(-r) : r; };
  // Candidates: y = x itself, every breakpoint, and every piece (where
  // the objective is linear in y, so its sup over the piece equals the
  // piece value minus n * distance(x, closure of the piece)).
  Rat best = f.eval(x);  // y = x
  const auto& breaks = f.breakpoints();
  const auto& points = f.point_values();
  const auto& pieces = f.piece_values();
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    Rat cand = points[i] - nn * absr(x - breaks[i]);
    best = std::max(best, cand);
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Rat& lo = breaks[i];
    const Rat& hi = breaks[i + 1];
    Rat dist = 0;
    if (x < lo)
      dist = lo - x;
    else if (x > hi)
      dist = x - hi;
    Rat cand = pieces[i] - nn * dist;
    best = std::max(best, cand);
  }
  return best;
}

Rat urysohn(const IntervalUnion& c0, const IntervalUnion& c1, const Rat& x) {
  if (c0.is_empty() || c1.is_empty())
    throw PreconditionError("urysohn requires non-empty closed sets");
  if (!c0.all_closed() || !c1.all_closed())
    throw PreconditionError("urysohn requires closed interval unions");
  if (!IntervalUnion::set_intersect(c0, c1).is_empty())
    throw PreconditionError("urysohn requires disjoint sets; they overlap at " +
                            IntervalUnion::set_intersect(c0, c1).to_string());
  Rat d0 = c0.distance(x);
  Rat d1 = c1.distance(x);
  return d0 / (d0 + d1);  // denominator positive: the sets are disjoint closed
}

Rat measure_bisect(const ClopenSet& set, unsigned n) {
  // Cells are the depth-n cylinders.  A cell counts when the measure of
  // the intersection is positive, which for a clopen set means some leaf
  // survives under the cell's prefix.
  std::set<std::string> positive;
  for (const std::string& leaf : set.leaves()) {
    if (leaf.size() >= n) {
      positive.insert(leaf.substr(0, n));
    } else {
      // every extension of this leaf to length n is fully inside
      std::vector<std::string> ext =
          ClopenSet::cylinder(leaf).leaves_at(n);
      positive.insert(ext.begin(), ext.end());
    }
  }
  return Rat(eff::Int(positive.size()), eff::Int(1) << n);
}

Rat measure_bisect(const IntervalUnion& closed_set, unsigned n) {
  if (!closed_set.all_closed())
    throw PreconditionError("measure_bisect needs a closed union");
  if (n > 24) throw Error("bisection depth too large");
  eff::Int cells = eff::Int(1) << n;
  Rat cell_width = eff::pow2_inv(n);
  std::set<eff::Int> positive;
  for (const eff::Interval& part : closed_set.parts()) {
    if (part.lo == part.hi) continue;  // a point never has positive overlap
    // j ranges over cells [j,j+1]*2^-n with positive-width overlap
    eff::Int j_lo = eff::rat_floor(part.lo / cell_width);
    eff::Int j_hi = eff::rat_floor(part.hi / cell_width);
    for (eff::Int j = j_lo; j <= j_hi && j < cells; ++j) {
      if (j < 0) continue;
      Rat cell_lo = Rat(j) * cell_width;
      Rat cell_hi = Rat(j + 1) * cell_width;
      Rat lo = std::max(part.lo, cell_lo);
      Rat hi = std::min(part.hi, cell_hi);
      if (lo < hi) positive.insert(j);
    }
  }
  return Rat(eff::Int(positive.size())) * cell_width;
}

std::vector<std::uint8_t> cantor_intersection(
    const std::vector<ClopenSet>& sets, const ClopenEmptinessOracle& oracle) {
  if (sets.empty()) throw Error("cantor_intersection needs at least one set");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].is_empty())
      throw EmptySetError("level " + std::to_string(i) + " is empty");
    if (i + 1 < sets.size() && !sets[i + 1].subset_of(sets[i]))
      throw NestingViolated("level " + std::to_string(i + 1) +
                            " is not contained in level " + std::to_string(i));
  }
  ClopenSet meet = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i)
    meet = ClopenSet::set_intersect(meet, sets[i]);
  if (meet.is_empty()) throw EmptySetError("intersection is empty");
  return select_clopen(meet, oracle);
}

ContinuityReport decide_continuity_via_osc(const StepFn& f) {
  ContinuityReport rep;
  Rat best_osc = 0;
  Rat best_x = 0;
  for (const Rat& q : f.breakpoints()) {
    Rat o = f.osc_point(q);
    if (o > best_osc) {
      best_osc = o;
      best_x = q;
    }
  }
  if (best_osc == 0) {
    rep.continuous = true;
    return rep;
  }
  rep.continuous = false;
  rep.witness = best_x;
  rep.oscillation = best_osc;
  unsigned k = 0;
  while (eff::pow2_inv(k) > best_osc) ++k;
  rep.k = k;
  return rep;
}

}  // namespace platek::reductions
