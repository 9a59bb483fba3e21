#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace platek {

/// A finite simple type: the base type `0` or an arrow between two types.
/// Values are immutable and cheap to copy (shared structure).
class Type {
 public:
  /// The base type `0`.
  Type() : node_(nullptr) {}

  static Type base() { return Type(); }
  static Type arrow(Type domain, Type codomain);

  bool is_base() const { return node_ == nullptr; }
  bool is_arrow() const { return node_ != nullptr; }

  const Type& domain() const;
  const Type& codomain() const;

  /// rank(0) = 0, rank(s -> t) = max(rank(s) + 1, rank(t)).
  int rank() const;

  /// Number of nodes in the type tree (base counts as 1).
  int size() const;

  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }

  std::size_t hash() const;

  /// Right-associative rendering with minimal parentheses, e.g.
  /// "0 -> 0 -> 0" and "(0 -> 0) -> 0".
  std::string to_string() const;

  /// Splits d1 -> d2 -> ... -> dk -> 0 into its argument chain
  /// [d1, ..., dk].  The chain is empty for the base type.
  std::vector<Type> argument_chain() const;

  /// The result after consuming `n` arguments; requires n <= chain length.
  Type result_after(std::size_t n) const;

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Type::Node {
  Type domain;
  Type codomain;
  int rank;
  int size;
  std::size_t hash;
};

struct TypeHash {
  std::size_t operator()(const Type& t) const { return t.hash(); }
};

}  // namespace platek
