#pragma once

#include <string>

#include "platek/errors.hpp"
#include "platek/term.hpp"
#include "platek/types.hpp"

namespace platek {

/// Parses a complete term.  Surface grammar:
///
///   type ::= "0" | type "->" type | "(" type ")"        (right assoc)
///   term ::= app | "\" ident ":" type "." term
///          | "fix" ident ":" type "." term
///   app  ::= atom | app atom                             (left assoc)
///   atom ::= numeral | "suc" | "pred" | "case" | "#" ident
///          | ident | "(" term ")"
///
/// "--" starts a comment running to end of line.  Numerals are sugar for
/// suc applied repeatedly to 0.
Term parse(const std::string& text);

/// Parses a type expression on its own (used by CLI `enumerate`).
Type parse_type(const std::string& text);

}  // namespace platek
