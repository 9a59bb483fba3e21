#include "platek/typecheck.hpp"

#include "platek/pretty.hpp"

namespace platek {

TypingContext TypingContext::with(const std::string& name, Type type) const {
  TypingContext out = *this;
  out.bind(name, type);
  return out;
}

const Type& TypingContext::lookup_var(const std::string& name) const {
  auto it = vars_.find(name);
  if (it == vars_.end()) throw UnboundVariable(name);
  return it->second;
}

const Type& TypingContext::lookup_oracle(const std::string& name) const {
  auto it = oracles_.find(name);
  if (it == oracles_.end()) throw UnknownOracle(name);
  return it->second;
}

namespace {

Type check(const Term& t, const TypingContext& ctx) {
  static const Type kBase = Type::base();
  static const Type kUnary = Type::arrow(kBase, kBase);
  static const Type kCase =
      Type::arrow(kBase, Type::arrow(kBase, Type::arrow(kBase, kBase)));
  switch (t.kind()) {
    case TermKind::Zero:
      return kBase;
    case TermKind::Suc:
    case TermKind::Pred:
      return kUnary;
    case TermKind::Case:
      return kCase;
    case TermKind::Oracle:
      return ctx.lookup_oracle(t.name());
    case TermKind::Sem:
      return t.sem_value().type();
    case TermKind::Var:
      return ctx.lookup_var(t.name());
    case TermKind::Lam: {
      Type body = check(t.body(), ctx.with(t.name(), t.bound_type()));
      return Type::arrow(t.bound_type(), body);
    }
    case TermKind::Fix: {
      Type body = check(t.body(), ctx.with(t.name(), t.bound_type()));
      if (body != t.bound_type())
        throw TypeMismatch(t.bound_type().to_string(), body.to_string(),
                           pretty(t));
      return body;
    }
    case TermKind::App: {
      Type fn = check(t.fn(), ctx);
      Type arg = check(t.arg(), ctx);
      if (!fn.is_arrow())
        throw TypeMismatch("a function type", fn.to_string(), pretty(t));
      if (fn.domain() != arg)
        throw TypeMismatch(fn.domain().to_string(), arg.to_string(),
                           pretty(t));
      return fn.codomain();
    }
  }
  throw TypeError("malformed term");
}

}  // namespace

Type typecheck(const Term& t, const TypingContext& ctx) {
  return check(t, ctx);
}

}  // namespace platek
