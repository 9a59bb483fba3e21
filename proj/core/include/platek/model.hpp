#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "platek/errors.hpp"
#include "platek/types.hpp"

namespace platek {

/// Parameters of a truncated finite model.  The base domain is
/// {0, ..., base_bound} plus bottom with the flat order; arithmetic that
/// leaves the window yields bottom.
struct FinModel {
  std::uint64_t base_bound = 1;
  std::uint64_t enumeration_budget = 1'000'000;
};

class Model;

/// An element of a truncated partial space: bottom or a natural at the
/// base type, a monotone table at arrow types.  Tables are either eager
/// (entries aligned with the domain enumeration) or lazy (a host closure
/// with a memo); the two are semantically interchangeable and every
/// observation goes through Model operations.
class DomainElement {
 public:
  DomainElement() = default;
  bool valid() const { return node_ != nullptr; }

  bool is_bottom() const;
  bool is_nat() const;
  bool is_table() const;
  std::uint64_t nat() const;
  const Type& table_domain() const;

 private:
  friend class Model;
  struct Node;
  explicit DomainElement(std::shared_ptr<Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<Node> node_;
};

/// An element of a total space F(sigma): a natural at base, a table over
/// the total enumeration of the domain at arrow types.  Always eager.
class Total {
 public:
  Total() = default;
  bool valid() const { return node_ != nullptr; }

  bool is_nat() const;
  std::uint64_t nat() const;
  const Type& table_domain() const;
  const std::vector<Total>& entries() const;

  bool equals(const Total& other) const;
  std::size_t hash() const;

 private:
  friend class Model;
  struct Node;
  explicit Total(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TotalHash {
  std::size_t operator()(const Total& t) const { return t.hash(); }
};
struct TotalEq {
  bool operator()(const Total& a, const Total& b) const { return a.equals(b); }
};

/// A materialized enumeration of a partial space HC(sigma) together with
/// lookup and order structure.  Owned by a Model; read-only once built.
struct Space {
  Type type;
  std::vector<DomainElement> elems;  // deterministic order, a linear extension
  std::size_t bottom_index = 0;

  // Order matrix: bit j of row i says elems[i] <= elems[j].
  // Built on demand for spaces small enough; see Model::space_leq.
  std::vector<std::vector<std::uint64_t>> leq_rows;
  bool leq_built = false;

  // For each partial element, the index of the unique total whose
  // embedding it dominates, if any.  Built on demand.
  std::vector<std::optional<std::uint32_t>> dominated_total;
  bool dominated_built = false;

  std::unordered_map<std::size_t, std::vector<std::uint32_t>> index_buckets;
};

struct TotalSpace {
  Type type;
  std::vector<Total> elems;
  std::unordered_map<Total, std::uint32_t, TotalHash, TotalEq> index;
  std::vector<DomainElement> embedded;  // embed of each total, cached
  bool embedded_built = false;
};

/// A truncated finite model together with its enumeration caches.
/// Intended for single-threaded mutation; share read-only after warmup.
class Model {
 public:
  explicit Model(FinModel params = {}) : params_(params) {}
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;

  const FinModel& params() const { return params_; }
  std::uint64_t base_bound() const { return params_.base_bound; }

  // ---- element constructors ----
  DomainElement bottom();                       // base-type bottom
  DomainElement nat(std::uint64_t n);           // requires n <= base_bound
  /// Bottom of an arbitrary type: base bottom or the constant-bottom table.
  DomainElement bottom_of(const Type& type);
  /// Eager table over enumerate_partial(domain); entries must be aligned.
  DomainElement table(Type domain, std::vector<DomainElement> entries);
  /// Lazy table; fn must be pure and monotone.
  DomainElement lazy_table(Type domain,
                           std::function<DomainElement(const DomainElement&)> fn);

  Total total_nat(std::uint64_t n);
  Total total_table(Type domain, std::vector<Total> entries);

  // ---- enumerations ----
  /// Materialized enumeration of HC(sigma); throws BudgetExceeded.
  const Space& space(const Type& type);
  const TotalSpace& total_space(const Type& type);
  const std::vector<DomainElement>& enumerate_partial(const Type& type) {
    return space(type).elems;
  }
  const std::vector<Total>& enumerate_total(const Type& type) {
    return total_space(type).elems;
  }
  /// Streams HC(sigma) in enumeration order without materializing the
  /// space itself (component spaces are still materialized).  Stops early
  /// if the visitor returns false.  Not budget-limited.
  void for_each_partial(const Type& type,
                        const std::function<bool(const DomainElement&)>& visit);

  // ---- order and equality ----
  bool leq(const DomainElement& a, const DomainElement& b);
  bool equal(const DomainElement& a, const DomainElement& b);
  /// Order matrix access for a materialized space (built on demand).
  bool space_leq(const Type& type, std::uint32_t i, std::uint32_t j);

  // ---- application ----
  DomainElement apply(const DomainElement& fn, const DomainElement& arg);
  Total apply_total(const Total& fn, const Total& arg);

  // ---- embedding and totality ----
  DomainElement embed(const Type& type, const Total& value);
  /// Restriction of a partial element to the total arguments; defined when
  /// every such observation is total.
  std::optional<Total> total_of(const Type& type, const DomainElement& value);
  /// Index into enumerate_total(type) of the unique total g with
  /// embed(g) below the partial element #idx of HC(type), if any.
  std::optional<std::uint32_t> dominated_total_index(const Type& type,
                                                     std::uint32_t idx);

  // ---- fixed points ----
  /// Least fixed point of a monotone table f : sigma -> sigma.
  DomainElement lfp(const DomainElement& f);
  DomainElement lfp_host(const Type& sigma,
                         const std::function<DomainElement(const DomainElement&)>& f);

  // ---- diagnostics ----
  /// Deep monotonicity check of an element (forces lazy tables).
  bool is_monotone(const DomainElement& v);
  std::size_t element_hash(const DomainElement& v);
  /// Canonical rendering; used for logs and semantic-constant identity.
  std::string render(const DomainElement& v);
  std::string render_total(const Total& v);
  std::uint32_t index_of(const Type& type, const DomainElement& v);
  std::uint32_t index_of_total(const Type& type, const Total& v);

 private:
  struct TypeKey {
    std::size_t operator()(const Type& t) const { return t.hash(); }
  };

  const std::vector<DomainElement>& force(const DomainElement& v);
  const std::vector<DomainElement>& embedded_totals(const Type& type);
  void build_leq_matrix(const Type& type);
  void build_dominated(const Type& type);
  std::uint64_t count_arrow_space(const Type& type, std::uint64_t limit);
  void enumerate_arrow_stream(
      const Type& type, const std::function<bool(const DomainElement&)>& visit);
  double naive_partial_bound(const Type& type);

  FinModel params_;
  std::unordered_map<Type, std::unique_ptr<Space>, TypeKey> spaces_;
  std::unordered_map<Type, std::unique_ptr<TotalSpace>, TypeKey> total_spaces_;
};

}  // namespace platek
