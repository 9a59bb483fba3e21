#include "platek/optree.hpp"

#include <pthread.h>

#include <algorithm>
#include <exception>
#include <functional>
#include <memory>

#include "platek/pretty.hpp"
#include "platek/subst.hpp"
#include "platek/typecheck.hpp"

namespace platek {

std::string node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "Leaf";
    case NodeKind::BaseStep: return "BaseStep";
    case NodeKind::OracleApp: return "OracleApp";
    case NodeKind::BetaStep: return "BetaStep";
    case NodeKind::FixStep: return "FixStep";
    case NodeKind::Truncated: return "Truncated";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Agree: return "AGREE";
    case Verdict::Disagree: return "DISAGREE";
    case Verdict::InconclusiveFuel: return "INCONCLUSIVE-FUEL";
  }
  return "?";
}

namespace {

std::string outcome_brief(const Outcome& o) {
  switch (o.kind) {
    case OutcomeKind::Value: return std::to_string(o.value);
    case OutcomeKind::NoValue: return "_";
    case OutcomeKind::Refusal: return "refusal";
    case OutcomeKind::Stuck: return "stuck";
  }
  return "?";
}

struct Recorder {
  virtual ~Recorder() = default;
  virtual std::optional<std::size_t> open(std::optional<std::size_t> parent,
                                          std::uint64_t depth, NodeKind kind,
                                          const Term& term) = 0;
  virtual void close(std::optional<std::size_t> id, const Outcome& o) = 0;
  virtual void annotate(std::optional<std::size_t> id,
                        const std::string& text) = 0;
};

struct NullRecorder : Recorder {
  std::optional<std::size_t> open(std::optional<std::size_t>, std::uint64_t,
                                  NodeKind, const Term&) override {
    return std::nullopt;
  }
  void close(std::optional<std::size_t>, const Outcome&) override {}
  void annotate(std::optional<std::size_t>, const std::string&) override {}
};

struct TreeRecorder : Recorder {
  CompTree tree;
  TreeLimits limits;
  // parents that already carry a truncation marker
  std::vector<std::size_t> marked;

  explicit TreeRecorder(TreeLimits l) : limits(l) {}

  std::optional<std::size_t> open(std::optional<std::size_t> parent,
                                  std::uint64_t depth, NodeKind kind,
                                  const Term& term) override {
    if (tree.nodes.size() >= limits.max_nodes || depth > limits.max_depth) {
      add_marker(parent);
      return std::nullopt;
    }
    CompNode node;
    node.id = tree.nodes.size();
    node.parent = parent;
    node.kind = kind;
    node.term = term;
    PrettyOptions popts;
    popts.numerals = limits.numeral_snapshots;
    node.term_text = pretty(term, popts);
    if (parent) tree.nodes[*parent].children.push_back(node.id);
    tree.nodes.push_back(std::move(node));
    return tree.nodes.back().id;
  }

  void add_marker(std::optional<std::size_t> parent) {
    std::size_t key = parent ? *parent + 1 : 0;
    if (std::find(marked.begin(), marked.end(), key) != marked.end()) return;
    marked.push_back(key);
    CompNode node;
    node.id = tree.nodes.size();
    node.parent = parent;
    node.kind = NodeKind::Truncated;
    node.truncated = true;
    node.annotation = "subtree omitted: tree limits reached";
    node.outcome = Outcome::no_value(0, "not recorded");
    if (parent) tree.nodes[*parent].children.push_back(node.id);
    tree.nodes.push_back(std::move(node));
  }

  void close(std::optional<std::size_t> id, const Outcome& o) override {
    if (id) tree.nodes[*id].outcome = o;
  }

  void annotate(std::optional<std::size_t> id, const std::string& text) override {
    if (!id) return;
    CompNode& n = tree.nodes[*id];
    if (!n.annotation.empty()) n.annotation += "; ";
    n.annotation += text;
  }
};

// Non-tail sub-computations (suc/pred arguments, case scrutinees, oracle
// predecessors and queries) recurse on the host stack; the engine runs on
// a dedicated large-stack thread sized for this bound.
constexpr std::size_t kMaxHostDepth = 120000;

struct Engine {
  Model* finite = nullptr;
  const OracleTable& oracles;
  std::uint64_t fuel_left = 0;
  std::uint64_t fuel_initial = 0;
  Recorder& rec;
  NodeStats stats;
  bool approx = false;
  std::vector<std::string> notes;

  Engine(Model* m, const OracleTable& o, std::uint64_t fuel, Recorder& r)
      : finite(m), oracles(o), fuel_left(fuel), fuel_initial(fuel), rec(r) {}

  std::uint64_t consumed() const { return fuel_initial - fuel_left; }

  void note(const std::string& s) {
    if (std::find(notes.begin(), notes.end(), s) == notes.end()) notes.push_back(s);
  }

  Outcome eval(Term t, std::optional<std::size_t> parent, std::uint64_t depth,
               std::size_t host_depth);

  /// Builds the total Psi from predecessor values listed in lexicographic
  /// tuple order over the given argument chain.
  Total assemble_total(Model& m, const std::vector<Type>& chain,
                       const std::vector<std::uint64_t>& values,
                       std::size_t lo, std::size_t hi) {
    if (chain.empty()) return m.total_nat(values.at(lo));
    std::vector<Type> rest(chain.begin() + 1, chain.end());
    std::size_t n1 = m.enumerate_total(chain[0]).size();
    std::size_t block = (hi - lo) / n1;
    std::vector<Total> entries;
    entries.reserve(n1);
    for (std::size_t g = 0; g < n1; ++g)
      entries.push_back(assemble_total(m, rest, values, lo + g * block,
                                       lo + (g + 1) * block));
    return m.total_table(chain[0], std::move(entries));
  }
};

/// Demand-driven handle of the infinite model: each query evaluates the
/// oracle's argument term at encoded total arguments, spending fuel.
struct TermBackedHandle : QueryHandle {
  Engine& eng;
  Term arg_term;
  Type arg_type;
  std::size_t position;
  std::optional<std::size_t> node;
  std::uint64_t depth;
  std::size_t host_depth;
  std::vector<QueryRecord> log;

  TermBackedHandle(Engine& e, Term term, Type type, std::size_t pos,
                   std::optional<std::size_t> n, std::uint64_t d, std::size_t hd)
      : eng(e),
        arg_term(std::move(term)),
        arg_type(std::move(type)),
        position(pos),
        node(n),
        depth(d),
        host_depth(hd) {}

  Outcome apply(const std::vector<QueryArg>& args) override {
    std::vector<Type> chain = arg_type.argument_chain();
    Outcome out;
    if (args.size() != chain.size()) {
      out = Outcome::stuck("query arity mismatch at oracle argument " +
                           std::to_string(position));
    } else {
      Term q = arg_term;
      for (std::size_t i = 0; i < args.size(); ++i)
        q = Term::app(q, term_from_query_arg(chain[i], args[i]));
      out = eng.eval(q, node, depth + 1, host_depth + 1);
    }
    eng.stats.oracle_queries++;
    std::string rendered;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) rendered += ",";
      rendered += args[i].render();
    }
    eng.rec.annotate(node, "q" + std::to_string(position) + "(" + rendered +
                               ")=" + outcome_brief(out));
    QueryRecord r;
    r.handle = position;
    r.args = args;
    r.outcome = out;
    log.push_back(std::move(r));
    return out;
  }
};

Outcome Engine::eval(Term t, std::optional<std::size_t> parent,
                     std::uint64_t depth, std::size_t host_depth) {
  if (host_depth > kMaxHostDepth)
    return Outcome::no_value(consumed(), "evaluator depth limit reached");

  // Nodes whose value is preserved from the node below them (beta steps,
  // fix unfoldings, chosen case branches, oracle continuations).
  std::vector<std::optional<std::size_t>> chain;
  Outcome result;

  while (true) {
    if (fuel_left == 0) {
      result = Outcome::no_value(fuel_initial, "fuel exhausted");
      break;
    }
    --fuel_left;
    ++stats.nodes;
    if (depth > stats.max_depth) stats.max_depth = depth;

    auto [head, args] = head_decompose(t);
    const TermKind hk = head.kind();

    if (hk == TermKind::Zero) {
      if (!args.empty()) {
        result = Outcome::stuck("0 applied to arguments");
        break;
      }
      auto id = rec.open(parent, depth, NodeKind::Leaf, t);
      result = Outcome::value_of(0);
      rec.close(id, result);
      break;
    }

    if (hk == TermKind::Suc || hk == TermKind::Pred) {
      if (args.size() != 1) {
        result = Outcome::stuck("unsaturated base constant at type 0");
        break;
      }
      auto id = rec.open(parent, depth, NodeKind::BaseStep, t);
      Outcome sub = eval(args[0], id, depth + 1, host_depth + 1);
      if (!sub.is_value()) {
        result = sub;
      } else if (hk == TermKind::Suc) {
        if (finite && sub.value >= finite->base_bound()) {
          result = Outcome::no_value(consumed(), "suc leaves the base window");
        } else {
          result = Outcome::value_of(sub.value + 1);
        }
      } else {
        result = Outcome::value_of(sub.value == 0 ? 0 : sub.value - 1);
      }
      result.approximate = result.approximate || sub.approximate;
      rec.close(id, result);
      break;
    }

    if (hk == TermKind::Case) {
      if (args.size() != 3) {
        result = Outcome::stuck("case expects three arguments at type 0");
        break;
      }
      auto id = rec.open(parent, depth, NodeKind::BaseStep, t);
      Outcome scrut = eval(args[0], id, depth + 1, host_depth + 1);
      if (!scrut.is_value()) {
        result = scrut;
        rec.close(id, result);
        break;
      }
      // The chosen branch's value is the node's value.
      chain.push_back(id);
      t = scrut.value == 0 ? args[1] : args[2];
      parent = id;
      ++depth;
      continue;
    }

    if (hk == TermKind::Lam) {
      if (args.empty()) {
        result = Outcome::stuck("lambda at type 0");
        break;
      }
      auto id = rec.open(parent, depth, NodeKind::BetaStep, t);
      Term contracted = substitute(head.body(), head.name(), args[0]);
      t = apply_spine(std::move(contracted), args, 1);
      chain.push_back(id);
      parent = id;
      ++depth;
      continue;
    }

    if (hk == TermKind::Fix) {
      auto id = rec.open(parent, depth, NodeKind::FixStep, t);
      Term unfolded = substitute(head.body(), head.name(), head);
      t = apply_spine(std::move(unfolded), args, 0);
      chain.push_back(id);
      parent = id;
      ++depth;
      continue;
    }

    if (hk == TermKind::Var) {
      result = Outcome::stuck("free variable " + head.name());
      break;
    }

    // Oracle constants (named or semantic).
    const OraclePlugin* plugin = nullptr;
    OracleConfig cfg;
    std::vector<Total> applied;
    Type head_type;
    Total total_value;
    bool is_total = false;
    std::string oname;

    if (hk == TermKind::Oracle) {
      if (!oracles.registry) {
        result = Outcome::stuck("no oracle registry for #" + head.name());
        break;
      }
      const OraclePlugin* p = oracles.registry->find(head.name());
      if (!p) {
        result = Outcome::stuck("unknown oracle #" + head.name());
        break;
      }
      plugin = p;
      cfg = oracles.configs.for_oracle(head.name());
      head_type = plugin->signature();
      oname = head.name();
    } else {  // TermKind::Sem
      const SemValue& sv = head.sem_value();
      if (auto* tc = dynamic_cast<const TotalConst*>(&sv)) {
        is_total = true;
        total_value = tc->value();
        head_type = tc->type();
        oname = tc->describe();
      } else if (auto* st = dynamic_cast<const OracleStage*>(&sv)) {
        plugin = &st->plugin();
        cfg = st->config();
        applied = st->applied();
        head_type = st->type();
        oname = st->plugin().name();
      } else {
        result = Outcome::stuck("unknown semantic constant");
        break;
      }
    }

    if (head_type.is_base()) {
      // A type-0 constant is a leaf whose value the constant provides.
      if (!args.empty()) {
        result = Outcome::stuck("base-type constant applied to arguments");
        break;
      }
      auto id = rec.open(parent, depth, NodeKind::OracleApp, t);
      rec.annotate(id, "oracle " + oname);
      if (is_total) {
        result = Outcome::value_of(total_value.nat());
      } else {
        std::vector<Type> sigchain = plugin->signature().argument_chain();
        std::vector<std::unique_ptr<TotalBackedHandle>> owned;
        std::vector<QueryHandle*> handles;
        if (finite) {
          for (std::size_t i = 0; i < applied.size(); ++i) {
            owned.push_back(std::make_unique<TotalBackedHandle>(
                *finite, sigchain[i], applied[i]));
            handles.push_back(owned.back().get());
          }
        }
        PluginContext pctx;
        if (finite) pctx.finite_base_bound = finite->base_bound();
        PluginAnswer ans = plugin->answer(handles, cfg, pctx);
        for (const auto& h : owned) stats.oracle_queries += h->log().size();
        if (ans.kind == PluginAnswer::Kind::Value) {
          if (finite && ans.value > finite->base_bound()) {
            result = Outcome::no_value(consumed(),
                                       "oracle answer outside the base window");
          } else {
            result = Outcome::value_of(ans.value);
            result.approximate = ans.approximate;
            if (ans.approximate)
              note("oracle " + oname + " took an unverified branch");
          }
        } else if (ans.kind == PluginAnswer::Kind::Refusal) {
          result = Outcome::refusal(oname, ans.reason);
        } else {
          result = ans.blocked_on;
        }
      }
      rec.close(id, result);
      break;
    }

    if (args.empty()) {
      result = Outcome::stuck("oracle constant of arrow type at type 0");
      break;
    }

    if (finite) {
      // The all-totals rule: one predecessor per total argument tuple.
      Model& m = *finite;
      const Type sigma = head_type.domain();
      const Type tau = head_type.codomain();
      std::vector<Type> chain_types = sigma.argument_chain();

      auto id = rec.open(parent, depth, NodeKind::OracleApp, t);
      rec.annotate(id, "oracle " + oname);

      std::vector<std::size_t> sizes;
      std::size_t tuple_count = 1;
      for (const Type& d : chain_types) {
        sizes.push_back(m.enumerate_total(d).size());
        tuple_count *= sizes.back();
      }
      rec.annotate(id, "branching " + std::to_string(tuple_count));

      std::vector<std::uint64_t> values(tuple_count, 0);
      bool all_valued = true;
      Outcome first_bad;
      std::vector<std::size_t> idx(chain_types.size(), 0);
      for (std::size_t tuple = 0; tuple < tuple_count; ++tuple) {
        Term pred_term = args[0];
        for (std::size_t i = 0; i < chain_types.size(); ++i) {
          const Total& g = m.enumerate_total(chain_types[i])[idx[i]];
          pred_term = Term::app(
              pred_term, Term::sem(std::make_shared<TotalConst>(
                             m, chain_types[i], g)));
        }
        Outcome sub = eval(pred_term, id, depth + 1, host_depth + 1);
        if (sub.is_value() && sub.value <= m.base_bound()) {
          values[tuple] = sub.value;
        } else if (all_valued) {
          all_valued = false;
          first_bad = sub.is_value()
                          ? Outcome::stuck("predecessor value outside window")
                          : sub;
        }
        // lexicographic successor (last position least significant)
        for (std::size_t i = chain_types.size(); i-- > 0;) {
          if (++idx[i] < sizes[i]) break;
          idx[i] = 0;
        }
      }

      if (!all_valued) {
        result = first_bad;
        rec.close(id, result);
        break;
      }

      Total psi = assemble_total(m, chain_types, values, 0, tuple_count);
      rec.annotate(id, "assembled " + m.render_total(psi));

      if (is_total) {
        Total xi = m.apply_total(total_value, psi);
        if (tau.is_base()) {
          result = Outcome::value_of(xi.nat());
          rec.close(id, result);
          break;
        }
        auto stage = std::make_shared<TotalConst>(m, tau, xi);
        t = apply_spine(Term::sem(stage), args, 1);
        chain.push_back(id);
        parent = id;
        ++depth;
        continue;
      }

      if (tau.is_base()) {
        // Final stage: every signature argument is assembled; consult the
        // plugin against the totals.
        std::vector<Type> sigchain = plugin->signature().argument_chain();
        std::vector<Total> all = applied;
        all.push_back(psi);
        std::vector<std::unique_ptr<TotalBackedHandle>> owned;
        std::vector<QueryHandle*> handles;
        for (std::size_t i = 0; i < all.size(); ++i) {
          owned.push_back(
              std::make_unique<TotalBackedHandle>(m, sigchain[i], all[i]));
          handles.push_back(owned.back().get());
        }
        PluginContext pctx;
        pctx.finite_base_bound = m.base_bound();
        PluginAnswer ans = plugin->answer(handles, cfg, pctx);
        std::size_t queries = 0;
        for (const auto& h : owned) {
          queries += h->log().size();
          for (const QueryRecord& r : h->log()) {
            std::string rendered;
            for (std::size_t i = 0; i < r.args.size(); ++i) {
              if (i) rendered += ",";
              rendered += r.args[i].render();
            }
            rec.annotate(id, "q(" + rendered + ")=" + outcome_brief(r.outcome));
          }
        }
        stats.oracle_queries += queries;
        if (ans.kind == PluginAnswer::Kind::Value) {
          if (ans.value > m.base_bound()) {
            result = Outcome::no_value(consumed(),
                                       "oracle answer outside the base window");
          } else {
            result = Outcome::value_of(ans.value);
            result.approximate = ans.approximate;
            if (ans.approximate)
              note("oracle " + oname + " took an unverified branch");
          }
        } else if (ans.kind == PluginAnswer::Kind::Refusal) {
          result = Outcome::refusal(oname, ans.reason);
        } else {
          result = ans.blocked_on.kind == OutcomeKind::Value
                       ? Outcome::stuck("plugin blocked on a value")
                       : ans.blocked_on;
        }
        rec.close(id, result);
        break;
      }

      // More signature arguments to consume: continue with xi s2 ... sn.
      std::vector<Total> staged = applied;
      staged.push_back(psi);
      auto stage = std::make_shared<OracleStage>(m, plugin, cfg, staged);
      t = apply_spine(Term::sem(stage), args, 1);
      chain.push_back(id);
      parent = id;
      ++depth;
      continue;
    }

    // Infinite model: demand-driven queries chosen by the plugin.
    if (is_total || !applied.empty()) {
      result = Outcome::stuck("staged oracle application in the infinite model");
      break;
    }
    std::vector<Type> sigchain = plugin->signature().argument_chain();
    if (args.size() != sigchain.size()) {
      result = Outcome::stuck("oracle not fully applied at type 0");
      break;
    }
    auto id = rec.open(parent, depth, NodeKind::OracleApp, t);
    rec.annotate(id, "oracle " + oname);
    std::vector<std::unique_ptr<TermBackedHandle>> owned;
    std::vector<QueryHandle*> handles;
    for (std::size_t i = 0; i < args.size(); ++i) {
      owned.push_back(std::make_unique<TermBackedHandle>(
          *this, args[i], sigchain[i], i, id, depth, host_depth));
      handles.push_back(owned.back().get());
    }
    PluginContext pctx;  // infinite
    PluginAnswer ans = plugin->answer(handles, cfg, pctx);
    if (ans.kind == PluginAnswer::Kind::Value) {
      result = Outcome::value_of(ans.value);
      result.approximate = ans.approximate;
      if (ans.approximate)
        note("oracle " + oname + " took an unverified branch (bound-limited)");
    } else if (ans.kind == PluginAnswer::Kind::Refusal) {
      result = Outcome::refusal(oname, ans.reason);
    } else {
      result = ans.blocked_on.kind == OutcomeKind::Value
                   ? Outcome::stuck("plugin blocked on a value")
                   : ans.blocked_on;
    }
    rec.close(id, result);
    break;
  }

  if (result.approximate && result.is_value()) approx = true;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    rec.close(*it, result);
  return result;
}

/// Runs fn on a thread with a stack large enough for kMaxHostDepth
/// evaluation frames.
void run_with_large_stack(const std::function<void()>& fn) {
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, 512ull * 1024 * 1024);
  struct Ctx {
    const std::function<void()>* fn;
    std::exception_ptr error;
  } ctx{&fn, nullptr};
  auto trampoline = [](void* raw) -> void* {
    Ctx* c = static_cast<Ctx*>(raw);
    try {
      (*c->fn)();
    } catch (...) {
      c->error = std::current_exception();
    }
    return nullptr;
  };
  pthread_t thread;
  if (pthread_create(&thread, &attr, trampoline, &ctx) != 0) {
    pthread_attr_destroy(&attr);
    fn();  // fall back to the caller's stack
    return;
  }
  pthread_join(thread, nullptr);
  pthread_attr_destroy(&attr);
  if (ctx.error) std::rethrow_exception(ctx.error);
}

EvalReport run_engine(const Term& t, const EvalSettings& settings,
                      const OracleTable& oracles, Recorder& rec) {
  EvalReport rep;
  try {
    Type ty = typecheck(t, oracles.typing_context());
    if (!ty.is_base()) {
      rep.outcome =
          Outcome::stuck("term has type " + ty.to_string() + ", expected 0");
      return rep;
    }
  } catch (const TypeError& e) {
    rep.outcome = Outcome::stuck(e.what());
    return rep;
  }
  Engine eng(settings.finite, oracles, settings.fuel, rec);
  // Host recursion depth is bounded by the fuel (every frame burns at
  // least one step), so small budgets can stay on the caller's stack.
  if (settings.fuel <= 4000) {
    rep.outcome = eng.eval(t, std::nullopt, 0, 0);
  } else {
    run_with_large_stack(
        [&] { rep.outcome = eng.eval(t, std::nullopt, 0, 0); });
  }
  rep.steps_used = settings.fuel - eng.fuel_left;
  rep.stats = eng.stats;
  rep.approximation = eng.approx || rep.outcome.approximate;
  rep.notes = eng.notes;
  return rep;
}

}  // namespace

EvalReport eval_op(const Term& t, const EvalSettings& settings,
                   const OracleTable& oracles) {
  NullRecorder rec;
  return run_engine(t, settings, oracles, rec);
}

CompTree build_tree(const Term& t, const EvalSettings& settings,
                    const OracleTable& oracles, const TreeLimits& limits) {
  TreeRecorder rec(limits);
  run_engine(t, settings, oracles, rec);
  return std::move(rec.tree);
}

AgreementReport check_equiv(const Term& t, Model& m, const OracleTable& oracles,
                            std::uint64_t fuel) {
  AgreementReport rep;
  Type ty = typecheck(t, oracles.typing_context());
  if (!ty.is_base())
    throw TypeMismatch("0", ty.to_string(), "check_equiv input");

  DomainElement d = eval_fin(t, {}, m, oracles);
  EvalSettings settings;
  settings.finite = &m;
  settings.fuel = fuel;
  EvalReport r = eval_op(t, settings, oracles);
  rep.operational = r.outcome;

  if (d.is_nat()) {
    rep.denot_defined = true;
    rep.denot_value = d.nat();
    if (r.outcome.is_value()) {
      rep.verdict = r.outcome.value == d.nat() ? Verdict::Agree
                                               : Verdict::Disagree;
      if (rep.verdict == Verdict::Disagree)
        rep.detail = "denotational " + std::to_string(d.nat()) +
                     " vs operational " + std::to_string(r.outcome.value);
    } else {
      // Denotationally defined but no value within fuel: retry, and call
      // it inconclusive when raising fuel changes the picture.
      EvalSettings retry = settings;
      retry.fuel = fuel * 10;
      EvalReport r2 = eval_op(t, retry, oracles);
      rep.fuel_raised = true;
      if (r2.outcome.is_value() && r2.outcome.value == d.nat()) {
        rep.verdict = Verdict::InconclusiveFuel;
        rep.detail = "value appears at 10x fuel";
        rep.operational = r2.outcome;
      } else if (r2.outcome.is_value()) {
        rep.verdict = Verdict::Disagree;
        rep.detail = "denotational " + std::to_string(d.nat()) +
                     " vs operational " + std::to_string(r2.outcome.value) +
                     " at 10x fuel";
      } else {
        rep.verdict = Verdict::Disagree;
        rep.detail = "denotational " + std::to_string(d.nat()) +
                     " but no operational value even at 10x fuel";
      }
    }
  } else {
    // Denotationally bottom: any operational value is a disagreement.
    if (r.outcome.is_value()) {
      rep.verdict = Verdict::Disagree;
      rep.detail = "denotational bottom vs operational value " +
                   std::to_string(r.outcome.value);
    } else {
      rep.verdict = Verdict::Agree;
    }
  }
  return rep;
}

}  // namespace platek
