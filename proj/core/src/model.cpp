#include "platek/model.hpp"

#include <algorithm>
#include <cmath>

namespace platek {

namespace {
inline std::size_t mix(std::size_t a, std::size_t b) {
  a ^= b + 0x9e3779b97f4a7c15ULL + (a << 12) + (a >> 4);
  return a;
}
}  // namespace

// ---------------------------------------------------------------------------
// Element nodes

struct DomainElement::Node {
  enum class K { Bottom, Nat, Table };
  K k = K::Bottom;
  std::uint64_t nat = 0;
  Type dom;  // Table only
  bool forced = false;
  std::vector<DomainElement> entries;  // valid when forced
  std::function<DomainElement(const DomainElement&)> fn;  // lazy tables
  // Per-argument memo keyed by node identity; the key copy keeps it alive.
  std::unordered_map<const Node*, std::pair<DomainElement, DomainElement>> memo;
  std::optional<std::size_t> hash;
};

bool DomainElement::is_bottom() const {
  return node_->k == Node::K::Bottom;
}
bool DomainElement::is_nat() const { return node_->k == Node::K::Nat; }
bool DomainElement::is_table() const { return node_->k == Node::K::Table; }
std::uint64_t DomainElement::nat() const { return node_->nat; }
const Type& DomainElement::table_domain() const { return node_->dom; }

struct Total::Node {
  bool is_nat = true;
  std::uint64_t nat = 0;
  Type dom;
  std::vector<Total> entries;
  std::size_t hash = 0;
};

bool Total::is_nat() const { return node_->is_nat; }
std::uint64_t Total::nat() const { return node_->nat; }
const Type& Total::table_domain() const { return node_->dom; }
const std::vector<Total>& Total::entries() const { return node_->entries; }
std::size_t Total::hash() const { return node_->hash; }

bool Total::equals(const Total& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash) return false;
  if (node_->is_nat != other.node_->is_nat) return false;
  if (node_->is_nat) return node_->nat == other.node_->nat;
  if (!(node_->dom == other.node_->dom)) return false;
  if (node_->entries.size() != other.node_->entries.size()) return false;
  for (std::size_t i = 0; i < node_->entries.size(); ++i)
    if (!node_->entries[i].equals(other.node_->entries[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Constructors

DomainElement Model::bottom() {
  static thread_local std::shared_ptr<DomainElement::Node> cached;
  if (!cached) {
    cached = std::make_shared<DomainElement::Node>();
    cached->k = DomainElement::Node::K::Bottom;
    cached->forced = true;
  }
  return DomainElement(cached);
}

DomainElement Model::nat(std::uint64_t n) {
  if (n > params_.base_bound)
    throw Error("nat " + std::to_string(n) + " outside base bound " +
                std::to_string(params_.base_bound));
  auto node = std::make_shared<DomainElement::Node>();
  node->k = DomainElement::Node::K::Nat;
  node->nat = n;
  node->forced = true;
  return DomainElement(std::move(node));
}

DomainElement Model::bottom_of(const Type& type) {
  if (type.is_base()) return bottom();
  Type cod = type.codomain();
  return lazy_table(type.domain(),
                    [this, cod](const DomainElement&) { return bottom_of(cod); });
}

DomainElement Model::table(Type domain, std::vector<DomainElement> entries) {
  auto node = std::make_shared<DomainElement::Node>();
  node->k = DomainElement::Node::K::Table;
  node->dom = std::move(domain);
  node->entries = std::move(entries);
  node->forced = true;
  return DomainElement(std::move(node));
}

DomainElement Model::lazy_table(
    Type domain, std::function<DomainElement(const DomainElement&)> fn) {
  auto node = std::make_shared<DomainElement::Node>();
  node->k = DomainElement::Node::K::Table;
  node->dom = std::move(domain);
  node->fn = std::move(fn);
  return DomainElement(std::move(node));
}

Total Model::total_nat(std::uint64_t n) {
  if (n > params_.base_bound)
    throw Error("total nat outside base bound");
  auto node = std::make_shared<Total::Node>();
  node->is_nat = true;
  node->nat = n;
  node->hash = mix(0x70a1, n);
  return Total(std::move(node));
}

Total Model::total_table(Type domain, std::vector<Total> entries) {
  auto node = std::make_shared<Total::Node>();
  node->is_nat = false;
  node->dom = std::move(domain);
  std::size_t h = mix(0x70a2, node->dom.hash());
  for (const Total& e : entries) h = mix(h, e.hash());
  node->hash = h;
  node->entries = std::move(entries);
  return Total(std::move(node));
}

// ---------------------------------------------------------------------------
// Enumeration

double Model::naive_partial_bound(const Type& type) {
  if (type.is_base()) return static_cast<double>(params_.base_bound + 2);
  double d = naive_partial_bound(type.domain());
  double c = naive_partial_bound(type.codomain());
  return std::pow(c, d);
}

const Space& Model::space(const Type& type) {
  auto it = spaces_.find(type);
  if (it != spaces_.end()) return *it->second;

  auto sp = std::make_unique<Space>();
  sp->type = type;
  if (type.is_base()) {
    sp->elems.push_back(bottom());
    for (std::uint64_t n = 0; n <= params_.base_bound; ++n)
      sp->elems.push_back(nat(n));
    sp->bottom_index = 0;
  } else {
    const std::uint64_t budget = params_.enumeration_budget;
    // When the crude bound already clears the budget we can materialize
    // directly; otherwise count first without building any elements, so
    // an oversized space fails fast and allocation-free.
    if (!(naive_partial_bound(type) <= static_cast<double>(budget))) {
      std::uint64_t count = count_arrow_space(type, budget);
      if (count > budget)
        throw BudgetExceeded("HC(" + type.to_string() + ")",
                             naive_partial_bound(type), budget);
    }
    std::vector<DomainElement> collected;
    bool exceeded = false;
    enumerate_arrow_stream(type, [&](const DomainElement& e) {
      if (collected.size() >= budget) {
        exceeded = true;
        return false;
      }
      collected.push_back(e);
      return true;
    });
    if (exceeded)
      throw BudgetExceeded("HC(" + type.to_string() + ")",
                           naive_partial_bound(type), budget);
    sp->elems = std::move(collected);
    sp->bottom_index = 0;  // the all-bottom table comes first lexicographically
  }
  for (std::uint32_t i = 0; i < sp->elems.size(); ++i) {
    std::size_t h = element_hash(sp->elems[i]);
    sp->index_buckets[h].push_back(i);
  }
  auto [pos, inserted] = spaces_.emplace(type, std::move(sp));
  (void)inserted;
  return *pos->second;
}

void Model::for_each_partial(
    const Type& type, const std::function<bool(const DomainElement&)>& visit) {
  if (type.is_base()) {
    if (!visit(bottom())) return;
    for (std::uint64_t n = 0; n <= params_.base_bound; ++n)
      if (!visit(nat(n))) return;
    return;
  }
  enumerate_arrow_stream(type, visit);
}

void Model::enumerate_arrow_stream(
    const Type& type, const std::function<bool(const DomainElement&)>& visit) {
  const Type dom = type.domain();
  const Type cod = type.codomain();
  space(dom);
  space(cod);
  build_leq_matrix(dom);
  build_leq_matrix(cod);
  const Space& Dm = *spaces_.at(dom);
  const Space& Cm = *spaces_.at(cod);
  const std::size_t nd = Dm.elems.size();
  const std::size_t nc = Cm.elems.size();

  // The enumeration order of D is a linear extension, so while assigning
  // entries left to right only constraints against earlier positions matter.
  std::vector<std::vector<std::uint32_t>> below(nd);
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (Dm.leq_rows[j][i >> 6] & (1ULL << (i & 63)))
        below[i].push_back(static_cast<std::uint32_t>(j));

  std::vector<std::uint32_t> assign(nd, 0);
  bool stop = false;

  auto emit = [&]() {
    std::vector<DomainElement> entries;
    entries.reserve(nd);
    for (std::size_t i = 0; i < nd; ++i) entries.push_back(Cm.elems[assign[i]]);
    if (!visit(table(type.domain(), std::move(entries)))) stop = true;
  };

  // Iterative backtracking (the recursion depth equals |D|).
  std::function<void(std::size_t)> bt = [&](std::size_t i) {
    if (stop) return;
    if (i == nd) {
      emit();
      return;
    }
    for (std::uint32_t c = 0; c < nc && !stop; ++c) {
      bool ok = true;
      for (std::uint32_t j : below[i]) {
        if (!(Cm.leq_rows[assign[j]][c >> 6] & (1ULL << (c & 63)))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        assign[i] = c;
        bt(i + 1);
      }
    }
  };
  bt(0);
}

std::uint64_t Model::count_arrow_space(const Type& type, std::uint64_t limit) {
  const Type dom = type.domain();
  const Type cod = type.codomain();
  space(dom);
  space(cod);
  build_leq_matrix(dom);
  build_leq_matrix(cod);
  const Space& Dm = *spaces_.at(dom);
  const Space& Cm = *spaces_.at(cod);
  const std::size_t nd = Dm.elems.size();
  const std::size_t nc = Cm.elems.size();
  std::vector<std::vector<std::uint32_t>> below(nd);
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (Dm.leq_rows[j][i >> 6] & (1ULL << (i & 63)))
        below[i].push_back(static_cast<std::uint32_t>(j));
  std::vector<std::uint32_t> assign(nd, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> bt = [&](std::size_t i) {
    if (count > limit) return;
    if (i == nd) {
      ++count;
      return;
    }
    for (std::uint32_t c = 0; c < nc && count <= limit; ++c) {
      bool ok = true;
      for (std::uint32_t j : below[i]) {
        if (!(Cm.leq_rows[assign[j]][c >> 6] & (1ULL << (c & 63)))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        assign[i] = c;
        bt(i + 1);
      }
    }
  };
  bt(0);
  return count;
}

const TotalSpace& Model::total_space(const Type& type) {
  auto it = total_spaces_.find(type);
  if (it != total_spaces_.end()) return *it->second;

  auto sp = std::make_unique<TotalSpace>();
  sp->type = type;
  if (type.is_base()) {
    for (std::uint64_t n = 0; n <= params_.base_bound; ++n)
      sp->elems.push_back(total_nat(n));
  } else {
    const TotalSpace& D = total_space(type.domain());
    const TotalSpace& C = total_space(type.codomain());
    const std::size_t nd = D.elems.size();
    const std::size_t nc = C.elems.size();
    double bound = std::pow(static_cast<double>(nc), static_cast<double>(nd));
    if (!(bound <= static_cast<double>(params_.enumeration_budget)))
      throw BudgetExceeded("F(" + type.to_string() + ")", bound,
                           params_.enumeration_budget);
    const TotalSpace& Cm = *total_spaces_.at(type.codomain());
    std::vector<std::uint32_t> assign(nd, 0);
    bool done = false;
    while (!done) {
      std::vector<Total> entries;
      entries.reserve(nd);
      for (std::size_t i = 0; i < nd; ++i) entries.push_back(Cm.elems[assign[i]]);
      sp->elems.push_back(total_table(type.domain(), std::move(entries)));
      // lexicographic successor, least-significant position last
      std::size_t i = nd;
      done = true;
      while (i > 0) {
        --i;
        if (++assign[i] < nc) {
          done = false;
          break;
        }
        assign[i] = 0;
      }
    }
  }
  for (std::uint32_t i = 0; i < sp->elems.size(); ++i)
    sp->index.emplace(sp->elems[i], i);
  auto [pos, inserted] = total_spaces_.emplace(type, std::move(sp));
  (void)inserted;
  return *pos->second;
}

// ---------------------------------------------------------------------------
// Order, equality, application

const std::vector<DomainElement>& Model::force(const DomainElement& v) {
  auto* node = v.node_.get();
  if (!node->forced) {
    const Space& D = space(node->dom);
    std::vector<DomainElement> entries;
    entries.reserve(D.elems.size());
    for (const DomainElement& phi : D.elems) entries.push_back(apply(v, phi));
    node->entries = std::move(entries);
    node->forced = true;
    node->memo.clear();
    node->fn = nullptr;
  }
  return node->entries;
}

bool Model::equal(const DomainElement& a, const DomainElement& b) {
  if (a.node_ == b.node_) return true;
  using K = DomainElement::Node::K;
  K ka = a.node_->k, kb = b.node_->k;
  if (ka != kb) {
    if (ka == K::Table || kb == K::Table)
      throw Error("equal: comparing elements of different types");
    return false;
  }
  switch (ka) {
    case K::Bottom:
      return true;
    case K::Nat:
      return a.node_->nat == b.node_->nat;
    case K::Table: {
      if (!(a.node_->dom == b.node_->dom))
        throw Error("equal: table domains differ");
      const auto& ea = force(a);
      const auto& eb = force(b);
      for (std::size_t i = 0; i < ea.size(); ++i)
        if (!equal(ea[i], eb[i])) return false;
      return true;
    }
  }
  return false;
}

bool Model::leq(const DomainElement& a, const DomainElement& b) {
  if (a.node_ == b.node_) return true;
  using K = DomainElement::Node::K;
  K ka = a.node_->k, kb = b.node_->k;
  if (ka == K::Bottom) {
    if (kb == K::Table) throw Error("leq: comparing elements of different types");
    return true;
  }
  if (ka == K::Nat) {
    if (kb == K::Table) throw Error("leq: comparing elements of different types");
    return kb == K::Nat && a.node_->nat == b.node_->nat;
  }
  if (kb != K::Table) throw Error("leq: comparing elements of different types");
  if (!(a.node_->dom == b.node_->dom)) throw Error("leq: table domains differ");
  const auto& ea = force(a);
  const auto& eb = force(b);
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (!leq(ea[i], eb[i])) return false;
  return true;
}

DomainElement Model::apply(const DomainElement& fn, const DomainElement& arg) {
  auto* node = fn.node_.get();
  if (node->k != DomainElement::Node::K::Table)
    throw Error("apply: not a function element");
  if (node->forced) {
    std::uint32_t idx = index_of(node->dom, arg);
    return node->entries[idx];
  }
  auto it = node->memo.find(arg.node_.get());
  if (it != node->memo.end()) return it->second.second;
  DomainElement result = node->fn(arg);
  node->memo.emplace(arg.node_.get(), std::make_pair(arg, result));
  return result;
}

Total Model::apply_total(const Total& fn, const Total& arg) {
  if (fn.is_nat()) throw Error("apply_total: not a function element");
  std::uint32_t idx = index_of_total(fn.table_domain(), arg);
  return fn.entries()[idx];
}

std::uint32_t Model::index_of(const Type& type, const DomainElement& v) {
  const Space& S = space(type);
  std::size_t h = element_hash(v);
  auto it = S.index_buckets.find(h);
  if (it != S.index_buckets.end()) {
    for (std::uint32_t idx : it->second)
      if (equal(S.elems[idx], v)) return idx;
  }
  throw Error("element not found in HC(" + type.to_string() + ")");
}

std::uint32_t Model::index_of_total(const Type& type, const Total& v) {
  const TotalSpace& S = total_space(type);
  auto it = S.index.find(v);
  if (it == S.index.end())
    throw Error("element not found in F(" + type.to_string() + ")");
  return it->second;
}

std::size_t Model::element_hash(const DomainElement& v) {
  auto* node = v.node_.get();
  if (node->hash) return *node->hash;
  std::size_t h;
  switch (node->k) {
    case DomainElement::Node::K::Bottom:
      h = 0xb07;
      break;
    case DomainElement::Node::K::Nat:
      h = mix(0x9a7, node->nat);
      break;
    case DomainElement::Node::K::Table: {
      h = mix(0x7ab1e, node->dom.hash());
      for (const DomainElement& e : force(v)) h = mix(h, element_hash(e));
      break;
    }
  }
  node->hash = h;
  return h;
}

void Model::build_leq_matrix(const Type& type) {
  Space& S = *spaces_.at(type);
  if (S.leq_built) return;
  const std::size_t n = S.elems.size();
  if (n > 20000)
    throw BudgetExceeded("order matrix for HC(" + type.to_string() + ")",
                         static_cast<double>(n) * static_cast<double>(n),
                         params_.enumeration_budget);
  const std::size_t words = (n + 63) / 64;
  S.leq_rows.assign(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq(S.elems[i], S.elems[j])) S.leq_rows[i][j >> 6] |= 1ULL << (j & 63);
  S.leq_built = true;
}

bool Model::space_leq(const Type& type, std::uint32_t i, std::uint32_t j) {
  space(type);
  build_leq_matrix(type);
  const Space& S = *spaces_.at(type);
  return (S.leq_rows[i][j >> 6] & (1ULL << (j & 63))) != 0;
}

// ---------------------------------------------------------------------------
// Embedding

const std::vector<DomainElement>& Model::embedded_totals(const Type& type) {
  total_space(type);
  TotalSpace& T = *total_spaces_.at(type);
  if (!T.embedded_built) {
    for (const Total& g : T.elems) T.embedded.push_back(embed(type, g));
    T.embedded_built = true;
  }
  return T.embedded;
}

void Model::build_dominated(const Type& type) {
  space(type);
  Space& S = *spaces_.at(type);
  if (S.dominated_built) return;
  const std::vector<DomainElement>& emb = embedded_totals(type);
  S.dominated_total.assign(S.elems.size(), std::nullopt);
  for (std::size_t i = 0; i < S.elems.size(); ++i) {
    for (std::uint32_t g = 0; g < emb.size(); ++g) {
      if (leq(emb[g], S.elems[i])) {
        if (S.dominated_total[i].has_value())
          throw ModelBug("embedding not uniquely dominated at HC(" +
                         type.to_string() + ") element " + std::to_string(i));
        S.dominated_total[i] = g;
      }
    }
  }
  S.dominated_built = true;
}

std::optional<std::uint32_t> Model::dominated_total_index(const Type& type,
                                                          std::uint32_t idx) {
  space(type);
  build_dominated(type);
  return spaces_.at(type)->dominated_total.at(idx);
}

DomainElement Model::embed(const Type& type, const Total& value) {
  if (type.is_base()) return nat(value.nat());
  const Type dom = type.domain();
  const Type cod = type.codomain();
  space(dom);
  build_dominated(dom);
  const Space& D = *spaces_.at(dom);
  std::vector<DomainElement> entries;
  entries.reserve(D.elems.size());
  for (std::size_t i = 0; i < D.elems.size(); ++i) {
    if (D.dominated_total[i].has_value()) {
      entries.push_back(embed(cod, value.entries()[*D.dominated_total[i]]));
    } else {
      entries.push_back(bottom_of(cod));
    }
  }
  return table(dom, std::move(entries));
}

std::optional<Total> Model::total_of(const Type& type,
                                     const DomainElement& value) {
  if (type.is_base()) {
    if (value.is_nat()) return total_nat(value.nat());
    return std::nullopt;
  }
  const Type dom = type.domain();
  const Type cod = type.codomain();
  const std::vector<DomainElement>& emb = embedded_totals(dom);
  std::vector<Total> entries;
  entries.reserve(emb.size());
  for (std::size_t g = 0; g < emb.size(); ++g) {
    DomainElement w = apply(value, emb[g]);
    auto t = total_of(cod, w);
    if (!t) return std::nullopt;
    entries.push_back(*t);
  }
  return total_table(dom, std::move(entries));
}

// ---------------------------------------------------------------------------
// Fixed points

DomainElement Model::lfp(const DomainElement& f) {
  if (!f.is_table()) throw Error("lfp: not a function element");
  return lfp_host(f.table_domain(),
                  [this, &f](const DomainElement& x) { return apply(f, x); });
}

DomainElement Model::lfp_host(
    const Type& sigma, const std::function<DomainElement(const DomainElement&)>& f) {
  DomainElement x = bottom_of(sigma);
  for (std::uint64_t iter = 0; iter < 1'000'000; ++iter) {
    DomainElement fx = f(x);
    if (equal(x, fx)) return x;
    x = fx;
  }
  throw ModelBug("lfp did not stabilize (non-monotone function?)");
}

// ---------------------------------------------------------------------------
// Diagnostics

bool Model::is_monotone(const DomainElement& v) {
  if (!v.is_table()) return true;
  const Type dom = v.table_domain();
  space(dom);
  build_leq_matrix(dom);
  const Space& D = *spaces_.at(dom);
  const auto& entries = force(v);
  const std::size_t n = D.elems.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_monotone(entries[i])) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (D.leq_rows[i][j >> 6] & (1ULL << (j & 63))) {
        if (!leq(entries[i], entries[j])) return false;
      }
    }
  }
  return true;
}

std::string Model::render(const DomainElement& v) {
  if (v.is_bottom()) return "bot";
  if (v.is_nat()) return std::to_string(v.nat());
  const auto& entries = force(v);
  std::string out = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += render(entries[i]);
  }
  out += "}";
  return out;
}

std::string Model::render_total(const Total& v) {
  if (v.is_nat()) return std::to_string(v.nat());
  const TotalSpace& D = total_space(v.table_domain());
  std::string out = "{";
  for (std::size_t i = 0; i < v.entries().size(); ++i) {
    if (i) out += ",";
    out += render_total(D.elems[i]) + "->" + render_total(v.entries()[i]);
  }
  out += "}";
  return out;
}

}  // namespace platek
