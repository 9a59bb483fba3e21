#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>

#include "platek/model.hpp"
#include "platek/oracles.hpp"
#include "platek/term.hpp"
#include "platek/typecheck.hpp"

namespace platek {

using Env = std::map<std::string, DomainElement>;

/// The oracle side of an evaluation: which plugins exist, how they are
/// configured, and a cache of their tabulations in the current model.
struct OracleTable {
  const OracleRegistry* registry = nullptr;
  OracleConfigSet configs;

  /// Typing context carrying every registered oracle signature.
  TypingContext typing_context() const;

  // Tabulation cache, keyed by plugin name and config fingerprint.
  mutable std::unordered_map<std::string, DomainElement> cache;
};

/// Exact denotational value of a term in a finite model.  Lam tabulates
/// lazily over the partial space of its binder type, Fix takes the least
/// fixed point, oracle constants denote their epsilon-embedded
/// tabulations, and base arithmetic leaves the window at bottom.
DomainElement eval_fin(const Term& t, const Env& env, Model& m,
                       const OracleTable& oracles);

/// The embedding of a plugin (partially applied to `applied`) into the
/// partial structure: total arguments are consulted through the plugin,
/// everything off the embedded totals is bottom.
DomainElement tabulate_oracle(const OraclePlugin& plugin, Model& m,
                              const OracleConfig& config,
                              const std::vector<Total>& applied = {});

/// Interpretations of the base constants as monotone tables.
DomainElement suc_table(Model& m);
DomainElement pred_table(Model& m);
DomainElement case_table(Model& m);

}  // namespace platek
