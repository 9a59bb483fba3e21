#include "platek/corpus.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "platek/pretty.hpp"

namespace platek {

std::vector<Type> candidate_types(int rank_bound, int size_bound) {
  std::vector<Type> out = {Type::base()};
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Type> cur = out;
    for (const Type& d : cur) {
      for (const Type& c : cur) {
        Type t = Type::arrow(d, c);
        if (t.size() > size_bound || t.rank() > rank_bound) continue;
        if (std::find(out.begin(), out.end(), t) == out.end()) {
          out.push_back(t);
          changed = true;
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Type& a, const Type& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.to_string() < b.to_string();
  });
  return out;
}

namespace {

struct TypedTerm {
  Type type;
  Term term;
};

struct Enumerator {
  const CorpusParams& params;
  std::vector<Type> candidates;
  std::vector<std::pair<std::string, Type>> constants;
  std::unordered_map<std::string, std::vector<TypedTerm>> memo;

  Enumerator(const CorpusParams& p, const OracleTable& oracles) : params(p) {
    candidates = candidate_types(p.type_rank_bound, p.type_size_bound);
    constants.emplace_back("0", Type::base());
    Type unary = Type::arrow(Type::base(), Type::base());
    constants.emplace_back("suc", unary);
    constants.emplace_back("pred", unary);
    constants.emplace_back(
        "case", Type::arrow(Type::base(),
                            Type::arrow(Type::base(), unary)));
    if (oracles.registry) {
      for (const std::string& name : p.oracle_names) {
        const OraclePlugin* plugin = oracles.registry->find(name);
        if (!plugin) throw UnknownOracle(name);
        constants.emplace_back("#" + name, plugin->signature());
      }
    }
  }

  static Term constant_term(const std::string& name) {
    if (name == "0") return Term::zero();
    if (name == "suc") return Term::suc();
    if (name == "pred") return Term::pred();
    if (name == "case") return Term::case_();
    return Term::oracle(name.substr(1));
  }

  std::string key(std::size_t size, const std::vector<Type>& ctx) {
    std::string k = std::to_string(size);
    for (const Type& t : ctx) k += "|" + t.to_string();
    return k;
  }

  const std::vector<TypedTerm>& terms(std::size_t size,
                                      std::vector<Type>& ctx) {
    std::string k = key(size, ctx);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;

    std::vector<TypedTerm> out;
    if (size == 1) {
      for (const auto& [name, ty] : constants)
        out.push_back({ty, constant_term(name)});
      for (std::size_t i = 0; i < ctx.size(); ++i)
        out.push_back({ctx[i], Term::var("v" + std::to_string(i))});
    } else {
      // lambda and fix bind variable v<depth>
      std::string bound = "v" + std::to_string(ctx.size());
      for (const Type& d : candidates) {
        ctx.push_back(d);
        std::vector<TypedTerm> body = terms(size - 1, ctx);
        ctx.pop_back();
        for (const TypedTerm& b : body) {
          Type lam_ty = Type::arrow(d, b.type);
          if (lam_ty.rank() <= params.type_rank_bound)
            out.push_back({lam_ty, Term::lam(bound, d, b.term)});
          if (b.type == d) out.push_back({d, Term::fix(bound, d, b.term)});
        }
      }
      // applications f a with |f| + |a| = size - 1
      for (std::size_t fs = 1; fs + 2 <= size; ++fs) {
        std::size_t as = size - 1 - fs;
        std::map<std::string, std::vector<TypedTerm>> args_by_type;
        for (const TypedTerm& a : terms(as, ctx))
          args_by_type[a.type.to_string()].push_back(a);
        for (const TypedTerm& f : terms(fs, ctx)) {
          if (!f.type.is_arrow()) continue;
          auto ait = args_by_type.find(f.type.domain().to_string());
          if (ait == args_by_type.end()) continue;
          for (const TypedTerm& a : ait->second)
            out.push_back({f.type.codomain(), Term::app(f.term, a.term)});
        }
      }
    }
    auto [pos, inserted] = memo.emplace(std::move(k), std::move(out));
    (void)inserted;
    return pos->second;
  }
};

}  // namespace

std::vector<Term> enumerate_closed_terms(const CorpusParams& params,
                                         const OracleTable& oracles) {
  Enumerator e(params, oracles);
  std::vector<Type> ctx;
  std::vector<Term> out;
  for (std::size_t size = 1; size <= params.max_term_size; ++size) {
    for (const TypedTerm& t : e.terms(size, ctx))
      if (t.type.is_base()) out.push_back(t.term);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random generation

TermGen::TermGen(std::uint64_t seed, const CorpusParams& params,
                 const OracleTable& oracles)
    : rng_(seed),
      candidates_(candidate_types(params.type_rank_bound, params.type_size_bound)),
      oracles_(oracles) {}

Type TermGen::random_candidate_type() {
  return candidates_[rng_.below(candidates_.size())];
}

Term TermGen::closed_term(const Type& type, std::size_t size_budget) {
  std::vector<std::pair<std::string, Type>> ctx;
  return gen(type, ctx, size_budget, 0);
}

Term TermGen::term_in_context(
    const Type& type, const std::vector<std::pair<std::string, Type>>& ctx,
    std::size_t size_budget) {
  std::vector<std::pair<std::string, Type>> c = ctx;
  return gen(type, c, size_budget, 0);
}

namespace {

Term canonical_inhabitant(const Type& type, int& fresh) {
  if (type.is_base()) return Term::zero();
  std::string name = "c" + std::to_string(fresh++);
  return Term::lam(name, type.domain(),
                   canonical_inhabitant(type.codomain(), fresh));
}

}  // namespace

Term TermGen::gen(const Type& type,
                  std::vector<std::pair<std::string, Type>>& ctx,
                  std::size_t budget, int depth) {
  // leaf options always available as the fallback
  auto leaf = [&]() -> Term {
    std::vector<Term> opts;
    for (const auto& [name, ty] : ctx)
      if (ty == type) opts.push_back(Term::var(name));
    if (type.is_base()) {
      opts.push_back(Term::numeral(rng_.below(3)));
    } else {
      static const Type unary = Type::arrow(Type::base(), Type::base());
      if (type == unary) {
        opts.push_back(Term::suc());
        opts.push_back(Term::pred());
      }
      if (oracles_.registry) {
        for (const auto& [name, plugin] : oracles_.registry->all())
          if (plugin->signature() == type) opts.push_back(Term::oracle(name));
      }
    }
    if (opts.empty()) return canonical_inhabitant(type, fresh_);
    return opts[rng_.below(opts.size())];
  };

  if (budget <= 1 || depth > 16) return leaf();

  std::uint64_t roll = rng_.below(10);
  if (type.is_arrow() && roll < 4) {
    std::string name = "g" + std::to_string(fresh_++);
    ctx.emplace_back(name, type.domain());
    Term body = gen(type.codomain(), ctx, budget - 1, depth + 1);
    ctx.pop_back();
    return Term::lam(name, type.domain(), body);
  }
  if (roll < 5 && type.rank() <= 2) {
    std::string name = "f" + std::to_string(fresh_++);
    ctx.emplace_back(name, type);
    Term body = gen(type, ctx, budget - 1, depth + 1);
    ctx.pop_back();
    return Term::fix(name, type, body);
  }
  if (roll < 8) {
    // application at a random argument type
    Type arg_ty = random_candidate_type();
    Type fn_ty = Type::arrow(arg_ty, type);
    if (fn_ty.rank() <= 3) {
      std::size_t half = budget / 2 == 0 ? 1 : budget / 2;
      Term fn = gen(fn_ty, ctx, half, depth + 1);
      Term arg = gen(arg_ty, ctx, budget - half, depth + 1);
      return Term::app(fn, arg);
    }
  }
  return leaf();
}

// ---------------------------------------------------------------------------
// fincheck driver

std::string FincheckReport::summary() const {
  std::string s = header + "\n";
  s += "terms " + std::to_string(total);
  s += "  agree " + std::to_string(agree);
  s += "  disagree " + std::to_string(disagree);
  s += "  inconclusive-fuel " + std::to_string(inconclusive);
  s += "  budget-exceeded " + std::to_string(budget_exceeded);
  s += "\n";
  for (const auto& [term, detail] : failures)
    s += "  FAIL " + term + " : " + detail + "\n";
  return s;
}

FincheckReport run_fincheck(const CorpusParams& params,
                            const OracleTable& oracles) {
  FincheckReport rep;
  std::string mode = params.sample_count == 0
                         ? "exhaustive"
                         : "sample:" + std::to_string(params.sample_count);
  std::string names;
  for (const std::string& n : params.oracle_names)
    names += (names.empty() ? "" : ",") + n;
  rep.header = "fincheck mode=" + mode +
               " max-size=" + std::to_string(params.max_term_size) +
               " rank-bound=" + std::to_string(params.type_rank_bound) +
               " base-bound=" + std::to_string(params.base_bound) +
               " fuel=" + std::to_string(params.fuel) +
               " seed=" + std::to_string(params.seed) + " oracles=" + names;

  std::vector<Term> corpus;
  if (params.sample_count == 0) {
    corpus = enumerate_closed_terms(params, oracles);
  } else {
    TermGen gen(params.seed, params, oracles);
    for (std::size_t i = 0; i < params.sample_count; ++i)
      corpus.push_back(
          gen.closed_term(Type::base(), params.max_term_size));
  }

  Model model({params.base_bound, params.enumeration_budget});
  for (const Term& t : corpus) {
    ++rep.total;
    try {
      AgreementReport r = check_equiv(t, model, oracles, params.fuel);
      switch (r.verdict) {
        case Verdict::Agree:
          ++rep.agree;
          break;
        case Verdict::Disagree:
          ++rep.disagree;
          rep.failures.emplace_back(pretty(t), r.detail);
          break;
        case Verdict::InconclusiveFuel:
          ++rep.inconclusive;
          rep.failures.emplace_back(pretty(t), "inconclusive: " + r.detail);
          break;
      }
    } catch (const BudgetExceeded&) {
      ++rep.budget_exceeded;
    }
  }
  return rep;
}

}  // namespace platek
