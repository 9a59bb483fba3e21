#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "platek/denot.hpp"
#include "platek/model.hpp"
#include "platek/oracles.hpp"
#include "platek/outcome.hpp"
#include "platek/term.hpp"

namespace platek {

enum class NodeKind { Leaf, BaseStep, OracleApp, BetaStep, FixStep, Truncated };

std::string node_kind_name(NodeKind k);

struct CompNode {
  std::size_t id = 0;
  std::optional<std::size_t> parent;
  NodeKind kind = NodeKind::Leaf;
  Term term;              // structural snapshot
  std::string term_text;  // pretty-printed snapshot
  Outcome outcome;
  std::vector<std::size_t> children;
  std::string annotation;  // oracle name, queried totals, truncation info
  bool truncated = false;
};

struct CompTree {
  std::vector<CompNode> nodes;
  std::size_t root = 0;
};

struct NodeStats {
  std::uint64_t nodes = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t oracle_queries = 0;
};

struct EvalReport {
  Outcome outcome;
  std::uint64_t steps_used = 0;
  NodeStats stats;
  bool approximation = false;
  std::vector<std::string> notes;
};

/// Which semantics drives oracle applications: the finite model follows
/// the all-totals rule literally; the infinite model hands plugins
/// demand-driven query handles.
struct EvalSettings {
  Model* finite = nullptr;  // nullptr selects the infinite model
  std::uint64_t fuel = 100000;
};

struct TreeLimits {
  std::size_t max_nodes = 100000;
  std::size_t max_depth = 100000;
  bool numeral_snapshots = false;  // collapse suc-chains in term snapshots
};

/// Fuel-bounded evaluation of a closed term of type 0.
EvalReport eval_op(const Term& t, const EvalSettings& settings,
                   const OracleTable& oracles);

/// Same evaluation, recording the computation tree (truncated to the
/// limits; truncation never changes the outcome).
CompTree build_tree(const Term& t, const EvalSettings& settings,
                    const OracleTable& oracles, const TreeLimits& limits);

enum class Verdict { Agree, Disagree, InconclusiveFuel };

std::string verdict_name(Verdict v);

struct AgreementReport {
  Verdict verdict = Verdict::Agree;
  bool denot_defined = false;
  std::uint64_t denot_value = 0;  // when defined
  Outcome operational;
  bool fuel_raised = false;  // a retry at higher fuel was needed
  std::string detail;
};

/// Runs both semantics in the same finite model and compares.
AgreementReport check_equiv(const Term& t, Model& m, const OracleTable& oracles,
                            std::uint64_t fuel);

}  // namespace platek
