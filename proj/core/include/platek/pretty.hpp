#pragma once

#include <string>

#include "platek/term.hpp"

namespace platek {

struct PrettyOptions {
  /// Collapse suc^n 0 into decimal numerals.
  bool numerals = false;
};

/// Renders a term so that parse(pretty(t)) is alpha-equal to t (for terms
/// without semantic constants; those render as bracketed descriptions).
std::string pretty(const Term& t, const PrettyOptions& opts = {});

}  // namespace platek
