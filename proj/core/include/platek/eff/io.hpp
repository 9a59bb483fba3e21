#pragma once

#include <map>
#include <string>
#include <variant>

#include "platek/eff/clopen.hpp"
#include "platek/eff/interval.hpp"
#include "platek/eff/stepfn.hpp"

namespace platek::eff {

using EffValue = std::variant<ClopenSet, IntervalUnion, StepFn>;

/// Contents of an .eff file: named sets and functions.
///
///   -- comment
///   clopen S { depth 2 leaves [ 01 10 ] }
///   intervals U { [0,1/4] (1/2,3/4) }
///   stepfn F { breakpoints [0 1/2 1] pieces [1 0] points [1 0 0] }
///
/// Rationals are written p/q (or plain integers).  Parsers reject
/// non-normalized input and say what the normalized form would be.
struct EffFile {
  std::map<std::string, EffValue> values;

  const ClopenSet& clopen(const std::string& name) const;
  const IntervalUnion& intervals(const std::string& name) const;
  const StepFn& stepfn(const std::string& name) const;
};

EffFile parse_eff(const std::string& text);

std::string to_eff(const std::string& name, const EffValue& value);

}  // namespace platek::eff
