#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "platek/errors.hpp"
#include "platek/model.hpp"
#include "platek/outcome.hpp"
#include "platek/term.hpp"
#include "platek/types.hpp"

namespace platek {

/// Per-plugin key/value configuration (e.g. searchBound, promisedDepth).
struct OracleConfig {
  std::map<std::string, std::string> entries;

  std::uint64_t get_u64(const std::string& key, std::uint64_t dflt) const;
  /// Canonical string for tabulation cache keys.
  std::string fingerprint() const;
};

/// Configurations for all oracles in a run, keyed by plugin name.
struct OracleConfigSet {
  std::map<std::string, OracleConfig> by_name;
  const OracleConfig& for_oracle(const std::string& name) const;
  /// Parses "name.key=value" (the CLI --oracle syntax).
  void set(const std::string& spec);
};

/// A total argument a plugin may query its handles with.  Naturals cover
/// base-type arguments; bit prefixes encode eventually-zero sequences as
/// functions of type 0 -> 0.
struct QueryArg {
  enum class Kind { Nat, BitPrefix };
  Kind kind = Kind::Nat;
  std::uint64_t nat = 0;
  std::vector<std::uint8_t> bits;

  static QueryArg natural(std::uint64_t n) {
    QueryArg q;
    q.kind = Kind::Nat;
    q.nat = n;
    return q;
  }
  static QueryArg bit_prefix(std::vector<std::uint8_t> b) {
    QueryArg q;
    q.kind = Kind::BitPrefix;
    q.bits = std::move(b);
    return q;
  }
  std::string render() const;
};

struct QueryRecord {
  std::size_t handle = 0;  // argument position
  std::vector<QueryArg> args;
  Outcome outcome;
};

/// The plugin's only view of one oracle argument.  Every apply call is
/// logged in order; plugins must depend on nothing but their config and
/// the sequence of results.
class QueryHandle {
 public:
  virtual ~QueryHandle() = default;
  virtual Outcome apply(const std::vector<QueryArg>& args) = 0;
};

struct PluginAnswer {
  enum class Kind { Value, Refusal, Blocked };
  Kind kind = Kind::Blocked;
  std::uint64_t value = 0;
  std::string reason;    // Refusal
  Outcome blocked_on;    // Blocked: the query outcome that stopped us
  bool approximate = false;

  static PluginAnswer value_of(std::uint64_t v, bool approx = false) {
    PluginAnswer a;
    a.kind = Kind::Value;
    a.value = v;
    a.approximate = approx;
    return a;
  }
  static PluginAnswer refusal(std::string reason) {
    PluginAnswer a;
    a.kind = Kind::Refusal;
    a.reason = std::move(reason);
    return a;
  }
  static PluginAnswer blocked(Outcome on) {
    PluginAnswer a;
    a.kind = Kind::Blocked;
    a.blocked_on = std::move(on);
    return a;
  }
};

/// Evaluation surroundings handed to a plugin: a finite model bound when
/// the run is model-exact, nothing otherwise.
struct PluginContext {
  std::optional<std::uint64_t> finite_base_bound;
  bool finite() const { return finite_base_bound.has_value(); }
};

/// A host-level partial functional usable as an oracle constant.
class OraclePlugin {
 public:
  virtual ~OraclePlugin() = default;
  virtual const std::string& name() const = 0;
  virtual const Type& signature() const = 0;
  /// One handle per signature argument, in order.
  virtual PluginAnswer answer(const std::vector<QueryHandle*>& handles,
                              const OracleConfig& config,
                              const PluginContext& ctx) const = 0;
};

class OracleRegistry {
 public:
  void add(std::shared_ptr<const OraclePlugin> plugin);
  const OraclePlugin& get(const std::string& name) const;  // throws UnknownOracle
  const OraclePlugin* find(const std::string& name) const;
  const std::map<std::string, std::shared_ptr<const OraclePlugin>>& all() const {
    return plugins_;
  }

  /// exists2, mu, omegaC, omegaB.
  static OracleRegistry builtins();

 private:
  std::map<std::string, std::shared_ptr<const OraclePlugin>> plugins_;
};

// ---- semantic constants (never parsed; created during evaluation) ----

/// A total element of the model used as a term constant.
class TotalConst : public SemValue {
 public:
  TotalConst(Model& m, Type type, Total value);
  Type type() const override { return type_; }
  std::string describe() const override { return description_; }
  const Total& value() const { return value_; }

 private:
  Type type_;
  Total value_;
  std::string description_;
};

/// A (possibly partially applied) oracle: the plugin plus the totals it
/// has consumed so far.  Its type is the remaining signature.
class OracleStage : public SemValue {
 public:
  OracleStage(Model& m, const OraclePlugin* plugin, OracleConfig config,
              std::vector<Total> applied);
  Type type() const override { return remaining_; }
  std::string describe() const override { return description_; }
  const OraclePlugin& plugin() const { return *plugin_; }
  const OracleConfig& config() const { return config_; }
  const std::vector<Total>& applied() const { return applied_; }

 private:
  const OraclePlugin* plugin_;
  OracleConfig config_;
  std::vector<Total> applied_;
  Type remaining_;
  std::string description_;
};

/// Handle backed by an assembled total (finite-model and tabulation use).
class TotalBackedHandle : public QueryHandle {
 public:
  TotalBackedHandle(Model& m, Type argType, Total value)
      : model_(m), arg_type_(std::move(argType)), value_(std::move(value)) {}
  Outcome apply(const std::vector<QueryArg>& args) override;
  const std::vector<QueryRecord>& log() const { return log_; }

 private:
  Model& model_;
  Type arg_type_;
  Total value_;
  std::vector<QueryRecord> log_;
};

/// Converts a QueryArg to a total element of the given type, when the
/// encoding fits the model (naturals within the base bound; bit prefixes
/// of length at most base_bound + 1 as tables of type 0 -> 0).
std::optional<Total> total_from_query_arg(Model& m, const Type& type,
                                          const QueryArg& arg);

/// Term encodings of query arguments: numerals, and prefix-then-zeros
/// ladders of type 0 -> 0 built from case and pred.
Term term_from_query_arg(const Type& type, const QueryArg& arg);

}  // namespace platek
