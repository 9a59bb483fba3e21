#pragma once

#include <map>
#include <string>

#include "platek/errors.hpp"
#include "platek/term.hpp"
#include "platek/types.hpp"

namespace platek {

/// Variable bindings plus the oracle signature table used to resolve
/// #name constants.  Lookups on absent names throw.
class TypingContext {
 public:
  TypingContext() = default;

  TypingContext with(const std::string& name, Type type) const;

  void bind(const std::string& name, Type type) { vars_[name] = type; }
  void declare_oracle(const std::string& name, Type signature) {
    oracles_[name] = signature;
  }

  const Type& lookup_var(const std::string& name) const;        // throws UnboundVariable
  const Type& lookup_oracle(const std::string& name) const;     // throws UnknownOracle
  bool has_var(const std::string& name) const { return vars_.count(name) > 0; }
  bool has_oracle(const std::string& name) const {
    return oracles_.count(name) > 0;
  }

 private:
  std::map<std::string, Type> vars_;
  std::map<std::string, Type> oracles_;
};

/// Returns the type of `t` under `ctx`; throws UnboundVariable,
/// UnknownOracle, or TypeMismatch.  Constants: 0 : 0, suc/pred : 0 -> 0,
/// case : 0 -> 0 -> 0 -> 0 (curried).
Type typecheck(const Term& t, const TypingContext& ctx = {});

}  // namespace platek
