#include "platek/oracles.hpp"

#include <algorithm>

namespace platek {

// ---------------------------------------------------------------------------
// Config

std::uint64_t OracleConfig::get_u64(const std::string& key,
                                    std::uint64_t dflt) const {
  auto it = entries.find(key);
  if (it == entries.end()) return dflt;
  try {
    return std::stoull(it->second);
  } catch (const std::exception&) {
    throw Error("oracle config " + key + "=" + it->second +
                " is not a natural number");
  }
}

std::string OracleConfig::fingerprint() const {
  std::string out;
  for (const auto& [k, v] : entries) out += k + "=" + v + ";";
  return out;
}

const OracleConfig& OracleConfigSet::for_oracle(const std::string& name) const {
  static const OracleConfig empty;
  auto it = by_name.find(name);
  return it == by_name.end() ? empty : it->second;
}

void OracleConfigSet::set(const std::string& spec) {
  auto dot = spec.find('.');
  auto eq = spec.find('=');
  if (dot == std::string::npos || eq == std::string::npos || eq < dot)
    throw Error("bad oracle config '" + spec + "'; expected name.key=value");
  std::string name = spec.substr(0, dot);
  std::string key = spec.substr(dot + 1, eq - dot - 1);
  std::string value = spec.substr(eq + 1);
  if (name.empty() || key.empty())
    throw Error("bad oracle config '" + spec + "'; expected name.key=value");
  by_name[name].entries[key] = value;
}

std::string QueryArg::render() const {
  if (kind == Kind::Nat) return std::to_string(nat);
  std::string out = "prefix:";
  for (std::uint8_t b : bits) out += b ? '1' : '0';
  return out;
}

// ---------------------------------------------------------------------------
// Query argument encodings

std::optional<Total> total_from_query_arg(Model& m, const Type& type,
                                          const QueryArg& arg) {
  const std::uint64_t N = m.base_bound();
  if (arg.kind == QueryArg::Kind::Nat) {
    if (!type.is_base()) return std::nullopt;
    if (arg.nat > N) return std::nullopt;
    return m.total_nat(arg.nat);
  }
  // Bit prefix: an eventually-zero sequence as a total of type 0 -> 0.
  static const Type unary = Type::arrow(Type::base(), Type::base());
  if (!(type == unary)) return std::nullopt;
  if (arg.bits.size() > N + 1) return std::nullopt;
  std::vector<Total> entries;
  for (std::uint64_t n = 0; n <= N; ++n) {
    std::uint64_t v = n < arg.bits.size() ? arg.bits[n] : 0;
    if (v > N) return std::nullopt;
    entries.push_back(m.total_nat(v));
  }
  return m.total_table(Type::base(), std::move(entries));
}

Term term_from_query_arg(const Type& type, const QueryArg& arg) {
  if (arg.kind == QueryArg::Kind::Nat) {
    if (!type.is_base()) throw Error("natural query arg at non-base type");
    return Term::numeral(arg.nat);
  }
  static const Type unary = Type::arrow(Type::base(), Type::base());
  if (!(type == unary)) throw Error("bit-prefix query arg at wrong type");
  // \n:0. case n b0 (case (pred n) b1 (... 0))
  const std::string var = "n";
  Term scrut = Term::var(var);
  Term body = Term::numeral(0);
  // Build inside out.
  std::vector<Term> scrutinees;
  for (std::size_t i = 0; i < arg.bits.size(); ++i) {
    Term s = Term::var(var);
    for (std::size_t k = 0; k < i; ++k) s = Term::app(Term::pred(), s);
    scrutinees.push_back(s);
  }
  for (std::size_t i = arg.bits.size(); i-- > 0;) {
    body = Term::app(
        Term::app(Term::app(Term::case_(), scrutinees[i]),
                  Term::numeral(arg.bits[i])),
        body);
  }
  return Term::lam(var, Type::base(), body);
}

// ---------------------------------------------------------------------------
// Handles

Outcome TotalBackedHandle::apply(const std::vector<QueryArg>& args) {
  Outcome out;
  std::vector<Type> chain = arg_type_.argument_chain();
  if (args.size() != chain.size()) {
    out = Outcome::stuck("query arity mismatch: argument of type " +
                         arg_type_.to_string() + " queried with " +
                         std::to_string(args.size()) + " values");
  } else {
    Total cur = value_;
    bool bad = false;
    for (std::size_t i = 0; i < args.size(); ++i) {
      auto t = total_from_query_arg(model_, chain[i], args[i]);
      if (!t) {
        out = Outcome::no_value(
            0, "query " + args[i].render() + " not encodable in the model");
        bad = true;
        break;
      }
      cur = model_.apply_total(cur, *t);
    }
    if (!bad) out = Outcome::value_of(cur.nat());
  }
  QueryRecord rec;
  rec.handle = 0;
  rec.args = args;
  rec.outcome = out;
  log_.push_back(std::move(rec));
  return out;
}

// ---------------------------------------------------------------------------
// Semantic constants

TotalConst::TotalConst(Model& m, Type type, Total value)
    : type_(std::move(type)), value_(std::move(value)) {
  description_ = m.render_total(value_);
}

OracleStage::OracleStage(Model& m, const OraclePlugin* plugin,
                         OracleConfig config, std::vector<Total> applied)
    : plugin_(plugin), config_(std::move(config)), applied_(std::move(applied)) {
  remaining_ = plugin_->signature().result_after(applied_.size());
  description_ = "#" + plugin_->name();
  for (const Total& t : applied_) description_ += "@" + m.render_total(t);
}

// ---------------------------------------------------------------------------
// Builtins

namespace {

Type sig_type2() {  // (0 -> 0) -> 0
  return Type::arrow(Type::arrow(Type::base(), Type::base()), Type::base());
}
Type sig_type3() {  // ((0 -> 0) -> 0) -> 0
  return Type::arrow(sig_type2(), Type::base());
}

/// Upward scan shared by exists2 and mu.  Returns the first n <= bound
/// with f(n) = 0, or nothing.
struct ScanResult {
  std::optional<std::uint64_t> witness;
  std::optional<PluginAnswer> failed;  // blocked on a valueless query
};

ScanResult scan_for_zero(QueryHandle& h, std::uint64_t bound) {
  ScanResult r;
  for (std::uint64_t n = 0; n <= bound; ++n) {
    Outcome q = h.apply({QueryArg::natural(n)});
    if (!q.is_value()) {
      r.failed = PluginAnswer::blocked(q);
      return r;
    }
    if (q.value == 0) {
      r.witness = n;
      return r;
    }
  }
  return r;
}

class Exists2Plugin : public OraclePlugin {
 public:
  const std::string& name() const override {
    static const std::string n = "exists2";
    return n;
  }
  const Type& signature() const override {
    static const Type t = sig_type2();
    return t;
  }
  PluginAnswer answer(const std::vector<QueryHandle*>& handles,
                      const OracleConfig& config,
                      const PluginContext& ctx) const override {
    std::uint64_t bound = ctx.finite() ? *ctx.finite_base_bound
                                       : config.get_u64("searchBound", 256);
    ScanResult r = scan_for_zero(*handles.at(0), bound);
    if (r.failed) return *r.failed;
    if (r.witness) return PluginAnswer::value_of(0);
    // No witness below the bound.  Exact in a finite model, where the
    // scan was exhaustive; otherwise flagged as unverified.
    return PluginAnswer::value_of(1, /*approx=*/!ctx.finite());
  }
};

class MuPlugin : public OraclePlugin {
 public:
  const std::string& name() const override {
    static const std::string n = "mu";
    return n;
  }
  const Type& signature() const override {
    static const Type t = sig_type2();
    return t;
  }
  PluginAnswer answer(const std::vector<QueryHandle*>& handles,
                      const OracleConfig& config,
                      const PluginContext& ctx) const override {
    std::uint64_t bound = ctx.finite() ? *ctx.finite_base_bound
                                       : config.get_u64("searchBound", 256);
    ScanResult r = scan_for_zero(*handles.at(0), bound);
    if (r.failed) return *r.failed;
    if (r.witness) return PluginAnswer::value_of(*r.witness);
    // "No zero anywhere" defaults to 0.
    return PluginAnswer::value_of(0, /*approx=*/!ctx.finite());
  }
};

/// Shared search of the Omega plugins: query the characteristic
/// functional at every depth-d prefix extended by zeros.
struct OmegaScan {
  std::vector<std::string> members;
  std::optional<PluginAnswer> failed;
};

OmegaScan omega_scan(QueryHandle& h, std::uint64_t depth) {
  OmegaScan r;
  std::uint64_t count = depth >= 63 ? 0 : (1ULL << depth);
  if (depth >= 63) {
    r.failed = PluginAnswer::refusal("promisedDepth too large");
    return r;
  }
  for (std::uint64_t idx = 0; idx < std::max<std::uint64_t>(count, 1); ++idx) {
    std::vector<std::uint8_t> bits(depth, 0);
    for (std::uint64_t i = 0; i < depth; ++i)
      bits[i] = (idx >> (depth - 1 - i)) & 1;  // lexicographic order
    Outcome q = h.apply({QueryArg::bit_prefix(bits)});
    if (!q.is_value()) {
      r.failed = PluginAnswer::blocked(q);
      return r;
    }
    if (q.value >= 1) {
      std::string s;
      for (std::uint8_t b : bits) s += b ? '1' : '0';
      r.members.push_back(s);
    }
  }
  return r;
}

class OmegaCPlugin : public OraclePlugin {
 public:
  const std::string& name() const override {
    static const std::string n = "omegaC";
    return n;
  }
  const Type& signature() const override {
    static const Type t = sig_type3();
    return t;
  }
  PluginAnswer answer(const std::vector<QueryHandle*>& handles,
                      const OracleConfig& config,
                      const PluginContext& ctx) const override {
    (void)ctx;
    std::uint64_t d = config.get_u64("promisedDepth", 8);
    OmegaScan r = omega_scan(*handles.at(0), d);
    if (r.failed) return *r.failed;
    return PluginAnswer::value_of(r.members.empty() ? 0 : 1);
  }
};

class OmegaBPlugin : public OraclePlugin {
 public:
  const std::string& name() const override {
    static const std::string n = "omegaB";
    return n;
  }
  const Type& signature() const override {
    static const Type t = sig_type3();
    return t;
  }
  PluginAnswer answer(const std::vector<QueryHandle*>& handles,
                      const OracleConfig& config,
                      const PluginContext& ctx) const override {
    (void)ctx;
    std::uint64_t d = config.get_u64("promisedDepth", 8);
    OmegaScan r = omega_scan(*handles.at(0), d);
    if (r.failed) return *r.failed;
    if (r.members.size() >= 2)
      return PluginAnswer::refusal("promise violation: at least two members, " +
                                   r.members[0] + " and " + r.members[1]);
    return PluginAnswer::value_of(r.members.empty() ? 0 : 1);
  }
};

}  // namespace

void OracleRegistry::add(std::shared_ptr<const OraclePlugin> plugin) {
  const std::string& n = plugin->name();
  if (plugins_.count(n)) throw Error("oracle already registered: " + n);
  plugins_.emplace(n, std::move(plugin));
}

const OraclePlugin& OracleRegistry::get(const std::string& name) const {
  auto it = plugins_.find(name);
  if (it == plugins_.end()) throw UnknownOracle(name);
  return *it->second;
}

const OraclePlugin* OracleRegistry::find(const std::string& name) const {
  auto it = plugins_.find(name);
  return it == plugins_.end() ? nullptr : it->second.get();
}

OracleRegistry OracleRegistry::builtins() {
  OracleRegistry reg;
  reg.add(std::make_shared<Exists2Plugin>());
  reg.add(std::make_shared<MuPlugin>());
  reg.add(std::make_shared<OmegaCPlugin>());
  reg.add(std::make_shared<OmegaBPlugin>());
  return reg;
}

}  // namespace platek
