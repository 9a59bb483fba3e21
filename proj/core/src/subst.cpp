#include "platek/subst.hpp"

#include <algorithm>
#include <set>

namespace platek {

namespace {

std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid) {
  std::string cand = base + "'";
  while (avoid.count(cand)) cand += "'";
  return cand;
}

Term subst(const Term& t, const std::string& x, const Term& s,
           const std::set<std::string>& fv_s) {
  switch (t.kind()) {
    case TermKind::Var:
      return t.name() == x ? s : t;
    case TermKind::App: {
      Term fn = subst(t.fn(), x, s, fv_s);
      Term arg = subst(t.arg(), x, s, fv_s);
      return Term::app(fn, arg);
    }
    case TermKind::Lam:
    case TermKind::Fix: {
      if (t.name() == x) return t;  // occurrence is bound below here
      std::set<std::string> fv_body = t.body().free_vars();
      if (!fv_body.count(x)) return t;  // nothing to replace
      Term body = t.body();
      std::string bound = t.name();
      if (fv_s.count(bound)) {
        // Rename the binder away from the free variables of s (and of the
        // body, so we do not capture anything else while renaming).
        std::set<std::string> avoid = fv_s;
        avoid.insert(fv_body.begin(), fv_body.end());
        avoid.insert(x);
        std::string renamed = fresh_name(bound, avoid);
        body = subst(body, bound, Term::var(renamed), {renamed});
        bound = renamed;
      }
      Term new_body = subst(body, x, s, fv_s);
      return t.kind() == TermKind::Lam
                 ? Term::lam(bound, t.bound_type(), new_body)
                 : Term::fix(bound, t.bound_type(), new_body);
    }
    default:
      return t;  // constants
  }
}

}  // namespace

Term substitute(const Term& t, const std::string& x, const Term& s) {
  return subst(t, x, s, s.free_vars());
}

std::pair<Term, std::vector<Term>> head_decompose(const Term& t) {
  std::vector<Term> args;
  Term cur = t;
  while (cur.kind() == TermKind::App) {
    args.push_back(cur.arg());
    cur = cur.fn();
  }
  std::reverse(args.begin(), args.end());
  return {cur, std::move(args)};
}

Term apply_spine(Term head, const std::vector<Term>& args, std::size_t from) {
  Term out = std::move(head);
  for (std::size_t i = from; i < args.size(); ++i)
    out = Term::app(out, args[i]);
  return out;
}

}  // namespace platek
