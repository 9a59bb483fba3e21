#pragma once

#include "platek/eff/clopen.hpp"
#include "platek/term.hpp"

namespace platek::eff {

/// A closed term of type (0 -> 0) -> 0 computing the characteristic
/// function of S on eventually-zero sequence encodings: the argument f
/// encodes the point (f 0, f 1, ...), and the term answers 1 or 0 by a
/// depth(S) decision tree of case/pred probes.
Term compile_clopen_to_term(const ClopenSet& set, std::size_t depth_limit = 16);

}  // namespace platek::eff
