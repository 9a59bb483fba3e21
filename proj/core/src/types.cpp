#include "platek/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace platek {

namespace {
inline std::size_t mix(std::size_t a, std::size_t b) {
  // 64-bit variant of boost::hash_combine.
  a ^= b + 0x9e3779b97f4a7c15ULL + (a << 12) + (a >> 4);
  return a;
}
}  // namespace

Type Type::arrow(Type domain, Type codomain) {
  auto node = std::make_shared<Node>();
  node->rank = std::max(domain.rank() + 1, codomain.rank());
  node->size = 1 + domain.size() + codomain.size();
  node->hash = mix(mix(0x9b1a6d3c, domain.hash()), codomain.hash());
  node->domain = std::move(domain);
  node->codomain = std::move(codomain);
  return Type(std::move(node));
}

const Type& Type::domain() const {
  if (!node_) throw std::logic_error("Type::domain on base type");
  return node_->domain;
}

const Type& Type::codomain() const {
  if (!node_) throw std::logic_error("Type::codomain on base type");
  return node_->codomain;
}

int Type::rank() const { return node_ ? node_->rank : 0; }

int Type::size() const { return node_ ? node_->size : 1; }

bool Type::operator==(const Type& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->hash != other.node_->hash) return false;
  return node_->domain == other.node_->domain &&
         node_->codomain == other.node_->codomain;
}

std::size_t Type::hash() const { return node_ ? node_->hash : 0x51ed270b; }

std::string Type::to_string() const {
  if (is_base()) return "0";
  const Type& d = domain();
  std::string left =
      d.is_arrow() ? "(" + d.to_string() + ")" : d.to_string();
  return left + " -> " + codomain().to_string();
}

std::vector<Type> Type::argument_chain() const {
  std::vector<Type> chain;
  Type cur = *this;
  while (cur.is_arrow()) {
    chain.push_back(cur.domain());
    cur = cur.codomain();
  }
  return chain;
}

Type Type::result_after(std::size_t n) const {
  Type cur = *this;
  for (std::size_t i = 0; i < n; ++i) {
    if (!cur.is_arrow())
      throw std::logic_error("Type::result_after: not enough arrows");
    cur = cur.codomain();
  }
  return cur;
}

}  // namespace platek
