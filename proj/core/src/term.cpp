#include "platek/term.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace platek {

namespace {
inline std::size_t mix(std::size_t a, std::size_t b) {
  a ^= b + 0x9e3779b97f4a7c15ULL + (a << 12) + (a >> 4);
  return a;
}
}  // namespace

struct Term::Node {
  TermKind kind;
  std::string name;
  Type annot;
  Term sub0;  // App fn; Lam/Fix body
  Term sub1;  // App arg
  std::shared_ptr<const SemValue> sem;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::shared_ptr<const Term::Node> leaf_node(TermKind k, std::size_t tag) {
  auto n = std::make_shared<Term::Node>();
  n->kind = k;
  n->hash = mix(0xc0ffee, tag);
  return n;
}

}  // namespace

Term Term::zero() {
  static const auto n = leaf_node(TermKind::Zero, 1);
  return Term(n);
}
Term Term::suc() {
  static const auto n = leaf_node(TermKind::Suc, 2);
  return Term(n);
}
Term Term::pred() {
  static const auto n = leaf_node(TermKind::Pred, 3);
  return Term(n);
}
Term Term::case_() {
  static const auto n = leaf_node(TermKind::Case, 4);
  return Term(n);
}

Term Term::oracle(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Oracle;
  n->hash = mix(0x0badc0de, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::sem(std::shared_ptr<const SemValue> value) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Sem;
  n->hash = mix(mix(0x5e77a11e, std::hash<std::string>{}(value->describe())),
                value->type().hash());
  n->sem = std::move(value);
  return Term(std::move(n));
}

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Var;
  n->hash = mix(0x7a12b345, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::lam(std::string bound, Type boundType, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Lam;
  n->size = 1 + body.size();
  n->hash = mix(mix(mix(0x1a3b5c7d, std::hash<std::string>{}(bound)),
                    boundType.hash()),
                body.hash());
  n->name = std::move(bound);
  n->annot = boundType;
  n->sub0 = std::move(body);
  return Term(std::move(n));
}

Term Term::fix(std::string bound, Type boundType, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Fix;
  n->size = 1 + body.size();
  n->hash = mix(mix(mix(0x2b4c6d8e, std::hash<std::string>{}(bound)),
                    boundType.hash()),
                body.hash());
  n->name = std::move(bound);
  n->annot = boundType;
  n->sub0 = std::move(body);
  return Term(std::move(n));
}

Term Term::app(Term fn, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::App;
  n->size = 1 + fn.size() + arg.size();
  n->hash = mix(mix(0x3c5d7e9f, fn.hash()), arg.hash());
  n->sub0 = std::move(fn);
  n->sub1 = std::move(arg);
  return Term(std::move(n));
}

Term Term::numeral(std::uint64_t n) {
  Term t = zero();
  for (std::uint64_t i = 0; i < n; ++i) t = app(suc(), t);
  return t;
}

TermKind Term::kind() const { return node_->kind; }

const std::string& Term::name() const { return node_->name; }
const Type& Term::bound_type() const { return node_->annot; }
const Term& Term::body() const { return node_->sub0; }
const Term& Term::fn() const { return node_->sub0; }
const Term& Term::arg() const { return node_->sub1; }
const SemValue& Term::sem_value() const { return *node_->sem; }
std::shared_ptr<const SemValue> Term::sem_value_ptr() const {
  return node_->sem;
}

std::size_t Term::size() const { return node_->size; }
std::size_t Term::hash() const { return node_->hash; }

bool Term::equals(const Term& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->hash != other.node_->hash) return false;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case TermKind::Zero:
    case TermKind::Suc:
    case TermKind::Pred:
    case TermKind::Case:
      return true;
    case TermKind::Oracle:
    case TermKind::Var:
      return node_->name == other.node_->name;
    case TermKind::Sem:
      return node_->sem == other.node_->sem ||
             (node_->sem->type() == other.node_->sem->type() &&
              node_->sem->describe() == other.node_->sem->describe());
    case TermKind::Lam:
    case TermKind::Fix:
      return node_->name == other.node_->name &&
             node_->annot == other.node_->annot &&
             node_->sub0.equals(other.node_->sub0);
    case TermKind::App:
      return node_->sub0.equals(other.node_->sub0) &&
             node_->sub1.equals(other.node_->sub1);
  }
  return false;
}

namespace {

bool alpha_eq(const Term& a, const Term& b,
              std::map<std::string, std::string>& ab,
              std::map<std::string, std::string>& ba, int& fresh) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Zero:
    case TermKind::Suc:
    case TermKind::Pred:
    case TermKind::Case:
      return true;
    case TermKind::Oracle:
      return a.name() == b.name();
    case TermKind::Sem:
      return a.sem_value().type() == b.sem_value().type() &&
             a.sem_value().describe() == b.sem_value().describe();
    case TermKind::Var: {
      auto ia = ab.find(a.name());
      auto ib = ba.find(b.name());
      if (ia == ab.end() && ib == ba.end()) return a.name() == b.name();
      if (ia == ab.end() || ib == ba.end()) return false;
      return ia->second == ib->second;  // bound on both sides: same marker
    }
    case TermKind::Lam:
    case TermKind::Fix: {
      if (a.bound_type() != b.bound_type()) return false;
      // Rename both binders to a shared fresh marker.
      std::string marker = "\x01" + std::to_string(fresh++);
      auto sa = ab.find(a.name());
      auto sb = ba.find(b.name());
      std::optional<std::string> olda, oldb;
      if (sa != ab.end()) olda = sa->second;
      if (sb != ba.end()) oldb = sb->second;
      ab[a.name()] = marker;
      ba[b.name()] = marker;
      bool ok = alpha_eq(a.body(), b.body(), ab, ba, fresh);
      if (olda)
        ab[a.name()] = *olda;
      else
        ab.erase(a.name());
      if (oldb)
        ba[b.name()] = *oldb;
      else
        ba.erase(b.name());
      return ok;
    }
    case TermKind::App:
      return alpha_eq(a.fn(), b.fn(), ab, ba, fresh) &&
             alpha_eq(a.arg(), b.arg(), ab, ba, fresh);
  }
  return false;
}

}  // namespace

bool Term::alpha_equal(const Term& a, const Term& b) {
  std::map<std::string, std::string> ab, ba;
  int fresh = 0;
  return alpha_eq(a, b, ab, ba, fresh);
}

namespace {
void collect_free(const Term& t, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      if (!bound.count(t.name())) out.insert(t.name());
      return;
    case TermKind::Lam:
    case TermKind::Fix: {
      bool fresh = bound.insert(t.name()).second;
      collect_free(t.body(), bound, out);
      if (fresh) bound.erase(t.name());
      return;
    }
    case TermKind::App:
      collect_free(t.fn(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
    default:
      return;
  }
}
}  // namespace

std::set<std::string> Term::free_vars() const {
  std::set<std::string> bound, out;
  collect_free(*this, bound, out);
  return out;
}

std::optional<std::uint64_t> Term::as_numeral() const {
  std::uint64_t n = 0;
  const Term* cur = this;
  while (cur->kind() == TermKind::App && cur->fn().kind() == TermKind::Suc) {
    ++n;
    cur = &cur->arg();
  }
  if (cur->kind() == TermKind::Zero) return n;
  return std::nullopt;
}

}  // namespace platek
