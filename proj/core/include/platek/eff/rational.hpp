#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "platek/errors.hpp"

namespace platek::eff {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Rat rat(long long p, long long q = 1) {
  if (q == 0) throw Error("rational with zero denominator");
  return Rat(Int(p), Int(q));
}

/// Parses "p/q" or "p" (optional leading '-').
Rat rat_parse(const std::string& text);

/// Exact lowest-terms rendering: "p/q", or "p" for integers.
std::string rat_str(const Rat& r);

/// 2^-n as an exact rational.
Rat pow2_inv(unsigned n);

/// Largest integer <= r.
Int rat_floor(const Rat& r);

}  // namespace platek::eff
