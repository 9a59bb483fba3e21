#pragma once

#include <string>
#include <utility>
#include <vector>

#include "platek/term.hpp"

namespace platek {

/// Capture-avoiding substitution t[x := s].  Binders that would capture a
/// free variable of s are renamed with primed fresh names.
Term substitute(const Term& t, const std::string& x, const Term& s);

/// Splits t into a head that is not an application and the argument
/// spine, so that t = head a1 ... an.
std::pair<Term, std::vector<Term>> head_decompose(const Term& t);

/// Reassembles head a1 ... an.
Term apply_spine(Term head, const std::vector<Term>& args,
                 std::size_t from = 0);

}  // namespace platek
