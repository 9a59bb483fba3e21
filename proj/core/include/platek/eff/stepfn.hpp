#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "platek/eff/rational.hpp"

namespace platek::eff {

/// A total function on [0,1] that is constant on the open pieces between
/// consecutive breakpoints and takes explicit values at the breakpoints.
/// Breakpoints are 0 = q0 < q1 < ... < qk = 1; piece i (1-based in the
/// math, 0-based here) is (q_i, q_{i+1}) with value piece_values[i];
/// point_values[i] is the value at q_i.  Everything is exact.
class StepFn {
 public:
  static StepFn make(std::vector<Rat> breakpoints, std::vector<Rat> piece_values,
                     std::vector<Rat> point_values);
  /// The constant function.
  static StepFn constant(const Rat& c);
  /// Characteristic function of a closed interval [a,b] (endpoints get 1).
  static StepFn indicator_closed(const Rat& a, const Rat& b);

  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<Rat>& piece_values() const { return pieces_; }
  const std::vector<Rat>& point_values() const { return points_; }
  std::size_t piece_count() const { return pieces_.size(); }

  Rat eval(const Rat& x) const;
  /// One-sided limits; left requires x > 0, right requires x < 1.
  Rat left_limit(const Rat& x) const;
  Rat right_limit(const Rat& x) const;

  /// Exact sup/inf of f over [p,q] (0 <= p <= q <= 1).
  Rat sup_on(const Rat& p, const Rat& q) const;
  Rat inf_on(const Rat& p, const Rat& q) const;
  Rat osc_interval(const Rat& a, const Rat& b) const;
  /// The stabilized oscillation over shrinking balls at x; zero exactly
  /// at continuity points.
  Rat osc_point(const Rat& x) const;

  /// The points x with liminf_{z->x} f(z) <= f(x) - q, for q > 0.  For a
  /// step function the liminf is the smaller one-sided limit, so the set
  /// is a subset of the breakpoints.
  std::vector<Rat> jump_set(const Rat& q) const;

  bool is_usco() const;

  /// Jordan total variation over [0,1].
  Rat variation() const;

  /// Largest value taken anywhere (attained; equals sup_on(0,1)).
  Rat max_value() const;
  Rat min_value() const;
  /// Whether {x : f(x) >= r} is non-empty (exact level-set test).
  bool level_set_nonempty(const Rat& r) const;

  std::string to_string() const;

 private:
  std::vector<Rat> breaks_;   // k+1 points, 0 and 1 included
  std::vector<Rat> pieces_;   // k open-piece values
  std::vector<Rat> points_;   // k+1 breakpoint values
  /// Index of the piece (q_i, q_{i+1}) containing x, when x is interior.
  std::optional<std::size_t> piece_of(const Rat& x) const;
  std::optional<std::size_t> break_index(const Rat& x) const;
};

}  // namespace platek::eff
