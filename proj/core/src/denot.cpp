#include "platek/denot.hpp"

namespace platek {

TypingContext OracleTable::typing_context() const {
  TypingContext ctx;
  if (registry) {
    for (const auto& [name, plugin] : registry->all())
      ctx.declare_oracle(name, plugin->signature());
  }
  return ctx;
}

DomainElement suc_table(Model& m) {
  const std::uint64_t N = m.base_bound();
  std::vector<DomainElement> entries;
  entries.push_back(m.bottom());
  for (std::uint64_t n = 0; n <= N; ++n)
    entries.push_back(n < N ? m.nat(n + 1) : m.bottom());
  return m.table(Type::base(), std::move(entries));
}

DomainElement pred_table(Model& m) {
  const std::uint64_t N = m.base_bound();
  std::vector<DomainElement> entries;
  entries.push_back(m.bottom());
  for (std::uint64_t n = 0; n <= N; ++n)
    entries.push_back(m.nat(n == 0 ? 0 : n - 1));
  return m.table(Type::base(), std::move(entries));
}

DomainElement case_table(Model& m) {
  // case b t e: strict in b, picks t on 0 and e on anything positive.
  const Type base = Type::base();
  const Type t00 = Type::arrow(base, base);
  const Space& S = m.space(base);
  std::vector<DomainElement> outer;
  for (const DomainElement& b : S.elems) {
    std::vector<DomainElement> mid;
    for (const DomainElement& t : S.elems) {
      std::vector<DomainElement> inner;
      for (const DomainElement& e : S.elems) {
        if (b.is_bottom())
          inner.push_back(m.bottom());
        else if (b.nat() == 0)
          inner.push_back(t);
        else
          inner.push_back(e);
      }
      mid.push_back(m.table(base, std::move(inner)));
    }
    outer.push_back(m.table(base, std::move(mid)));
  }
  (void)t00;
  return m.table(base, std::move(outer));
}

DomainElement tabulate_oracle(const OraclePlugin& plugin, Model& m,
                              const OracleConfig& config,
                              const std::vector<Total>& applied) {
  Type remaining = plugin.signature().result_after(applied.size());
  if (remaining.is_base()) {
    std::vector<Type> chain = plugin.signature().argument_chain();
    std::vector<std::unique_ptr<TotalBackedHandle>> owned;
    std::vector<QueryHandle*> handles;
    for (std::size_t i = 0; i < applied.size(); ++i) {
      owned.push_back(
          std::make_unique<TotalBackedHandle>(m, chain[i], applied[i]));
      handles.push_back(owned.back().get());
    }
    PluginContext ctx;
    ctx.finite_base_bound = m.base_bound();
    PluginAnswer ans = plugin.answer(handles, config, ctx);
    if (ans.kind == PluginAnswer::Kind::Value && ans.value <= m.base_bound())
      return m.nat(ans.value);
    return m.bottom();  // refusals, blocks, and out-of-window answers
  }
  const Type sigma = remaining.domain();
  const Type tau = remaining.codomain();
  const Space& S = m.space(sigma);
  const std::vector<Total>& totals = m.enumerate_total(sigma);
  std::vector<DomainElement> entries;
  entries.reserve(S.elems.size());
  for (std::uint32_t i = 0; i < S.elems.size(); ++i) {
    auto g = m.dominated_total_index(sigma, i);
    if (g.has_value()) {
      std::vector<Total> next = applied;
      next.push_back(totals[*g]);
      entries.push_back(tabulate_oracle(plugin, m, config, next));
    } else {
      entries.push_back(m.bottom_of(tau));
    }
  }
  return m.table(sigma, std::move(entries));
}

namespace {

DomainElement eval(const Term& t, const Env& env, Model& m,
                   const OracleTable& oracles) {
  switch (t.kind()) {
    case TermKind::Zero:
      return m.nat(0);
    case TermKind::Suc:
      return suc_table(m);
    case TermKind::Pred:
      return pred_table(m);
    case TermKind::Case:
      return case_table(m);
    case TermKind::Oracle: {
      if (!oracles.registry) throw UnknownOracle(t.name());
      const OraclePlugin& plugin = oracles.registry->get(t.name());
      const OracleConfig& cfg = oracles.configs.for_oracle(t.name());
      // the model is part of the key: a table may be reused across models
      std::ostringstream key_os;
      key_os << t.name() << "|" << cfg.fingerprint() << "|"
             << static_cast<const void*>(&m) << "|" << m.base_bound();
      std::string key = key_os.str();
      auto it = oracles.cache.find(key);
      if (it != oracles.cache.end()) return it->second;
      DomainElement v = tabulate_oracle(plugin, m, cfg);
      oracles.cache.emplace(std::move(key), v);
      return v;
    }
    case TermKind::Sem: {
      const SemValue& sv = t.sem_value();
      if (auto* tc = dynamic_cast<const TotalConst*>(&sv))
        return m.embed(tc->type(), tc->value());
      if (auto* st = dynamic_cast<const OracleStage*>(&sv))
        return tabulate_oracle(st->plugin(), m, st->config(), st->applied());
      throw Error("unknown semantic constant kind");
    }
    case TermKind::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw UnboundVariable(t.name());
      return it->second;
    }
    case TermKind::App: {
      DomainElement fn = eval(t.fn(), env, m, oracles);
      DomainElement arg = eval(t.arg(), env, m, oracles);
      return m.apply(fn, arg);
    }
    case TermKind::Lam: {
      Term body = t.body();
      std::string x = t.name();
      Env captured = env;
      Model* mp = &m;
      const OracleTable* op = &oracles;
      return m.lazy_table(t.bound_type(),
                          [body, x, captured, mp, op](const DomainElement& v) {
                            Env e2 = captured;
                            e2[x] = v;
                            return eval(body, e2, *mp, *op);
                          });
    }
    case TermKind::Fix: {
      Term body = t.body();
      std::string x = t.name();
      return m.lfp_host(t.bound_type(), [&](const DomainElement& v) {
        Env e2 = env;
        e2[x] = v;
        return eval(body, e2, m, oracles);
      });
    }
  }
  throw Error("malformed term in eval_fin");
}

}  // namespace

DomainElement eval_fin(const Term& t, const Env& env, Model& m,
                       const OracleTable& oracles) {
  return eval(t, env, m, oracles);
}

}  // namespace platek
