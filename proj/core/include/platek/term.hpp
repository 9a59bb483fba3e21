#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "platek/types.hpp"

namespace platek {

/// A host-level semantic constant that may appear as a term.  Computation
/// trees introduce these for the total arguments fed to oracle heads and
/// for partially applied oracles; they never occur in surface syntax.
class SemValue {
 public:
  virtual ~SemValue() = default;
  virtual Type type() const = 0;
  /// Canonical rendering; two SemValues with equal type and rendering are
  /// treated as the same constant.
  virtual std::string describe() const = 0;
};

enum class TermKind {
  Zero,
  Suc,
  Pred,
  Case,
  Oracle,  // named oracle constant, "#name" in surface syntax
  Sem,     // host-level semantic constant (never parsed)
  Var,
  Lam,
  Fix,
  App,
};

/// Immutable abstract syntax of the term language.  Shared structure,
/// cheap to copy.
class Term {
 public:
  Term() = default;  // empty handle; only valid after assignment

  static Term zero();
  static Term suc();
  static Term pred();
  static Term case_();
  static Term oracle(std::string name);
  static Term sem(std::shared_ptr<const SemValue> value);
  static Term var(std::string name);
  static Term lam(std::string bound, Type boundType, Term body);
  static Term fix(std::string bound, Type boundType, Term body);
  static Term app(Term fn, Term arg);

  /// suc applied n times to zero.
  static Term numeral(std::uint64_t n);

  bool valid() const { return node_ != nullptr; }
  TermKind kind() const;

  const std::string& name() const;   // Var, Oracle, Lam, Fix
  const Type& bound_type() const;    // Lam, Fix
  const Term& body() const;          // Lam, Fix
  const Term& fn() const;            // App
  const Term& arg() const;           // App
  const SemValue& sem_value() const;                     // Sem
  std::shared_ptr<const SemValue> sem_value_ptr() const; // Sem

  /// Number of AST nodes.
  std::size_t size() const;

  /// Structural (name-sensitive) equality and hash.
  bool equals(const Term& other) const;
  std::size_t hash() const;

  /// Equality up to renaming of bound variables.
  static bool alpha_equal(const Term& a, const Term& b);

  std::set<std::string> free_vars() const;
  bool is_closed() const { return free_vars().empty(); }

  /// If the term is suc^n zero, returns n.
  std::optional<std::uint64_t> as_numeral() const;

  struct Node;  // implementation detail, public only for the builders

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};
struct TermEq {
  bool operator()(const Term& a, const Term& b) const { return a.equals(b); }
};

}  // namespace platek
