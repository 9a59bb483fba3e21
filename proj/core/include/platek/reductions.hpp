#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "platek/eff/clopen.hpp"
#include "platek/eff/interval.hpp"
#include "platek/eff/stepfn.hpp"

namespace platek::reductions {

using eff::ClopenSet;
using eff::IntervalUnion;
using eff::Rat;
using eff::StepFn;

/// The oracles the reductions consume, kept explicit so the dependency
/// structure is visible in the call graph.  The defaults are the exact
/// deciders of the eff layer.
struct ClosedEmptinessOracle {
  std::function<bool(const IntervalUnion&)> is_empty =
      [](const IntervalUnion& u) { return u.is_empty(); };
};
struct LevelSetOracle {
  // whether {x : f(x) >= r} is non-empty
  std::function<bool(const StepFn&, const Rat&)> nonempty =
      [](const StepFn& f, const Rat& r) { return f.level_set_nonempty(r); };
};
struct ClopenEmptinessOracle {
  std::function<bool(const ClopenSet&)> is_empty =
      [](const ClopenSet& s) { return s.is_empty(); };
  mutable std::uint64_t queries = 0;
};

/// All rational pairs p < q with denominators at most denom_bound and
/// (p,q) contained in O, sorted.  Sound and complete relative to the
/// denominator bound.
std::vector<std::pair<Rat, Rat>> rm_code_open(
    const IntervalUnion& open_set, std::uint64_t denom_bound,
    const ClosedEmptinessOracle& oracle = {});

/// Supremum of an upper semi-continuous step function by bisection on
/// level-set emptiness; the result is within 2^-k of the exact value.
/// The transcript, when requested, records each (r, nonempty) query.
Rat sup_usco(const StepFn& f, unsigned k, const LevelSetOracle& oracle = {},
             std::vector<std::pair<Rat, bool>>* transcript = nullptr);

/// Lexicographically least member of a non-empty clopen set by
/// interval halving: one emptiness query per level.
std::vector<std::uint8_t> select_clopen(const ClopenSet& set,
                                        const ClopenEmptinessOracle& oracle = {});

/// The Lipschitz upper envelope sup_y (f(y) - n|x - y|), evaluated
/// exactly by scanning the finite candidate set.
Rat moreau_env(const StepFn& f, std::uint64_t n, const Rat& x);

/// The canonical separating function d(x,C0) / (d(x,C0) + d(x,C1)) for
/// disjoint non-empty closed unions; 0 exactly on C0 and 1 exactly on C1.
Rat urysohn(const IntervalUnion& c0, const IntervalUnion& c1, const Rat& x);

/// Dyadic overestimate of the measure at depth n: the total width of the
/// depth-n cells whose intersection with the set has positive measure.
Rat measure_bisect(const ClopenSet& set, unsigned n);
Rat measure_bisect(const IntervalUnion& closed_set, unsigned n);

/// A member of the intersection of a nested non-empty sequence.
std::vector<std::uint8_t> cantor_intersection(
    const std::vector<ClopenSet>& sets,
    const ClopenEmptinessOracle& oracle = {});

struct ContinuityReport {
  bool continuous = true;
  Rat witness;      // a point of maximal oscillation when discontinuous
  Rat oscillation;  // its oscillation
  unsigned k = 0;   // least k with oscillation >= 2^-k
};

/// Decides continuity from the oscillation function; when discontinuous,
/// returns a witness in the largest applicable jump class.
ContinuityReport decide_continuity_via_osc(const StepFn& f);

}  // namespace platek::reductions
