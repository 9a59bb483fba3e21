#include "platek/eff/bridge.hpp"

#include <algorithm>

#include "platek/types.hpp"

namespace platek::eff {

namespace {

Term decision_tree(const ClopenSet& set, std::string& prefix,
                   const std::string& var) {
  if (prefix.size() == set.depth()) {
    bool in = std::binary_search(set.leaves().begin(), set.leaves().end(),
                                 prefix);
    return Term::numeral(in ? 1 : 0);
  }
  // case (f k) <bit 0 branch> <bit 1 branch>
  Term probe = Term::app(Term::var(var),
                         Term::numeral(static_cast<std::uint64_t>(prefix.size())));
  prefix.push_back('0');
  Term zero_branch = decision_tree(set, prefix, var);
  prefix.back() = '1';
  Term one_branch = decision_tree(set, prefix, var);
  prefix.pop_back();
  return Term::app(Term::app(Term::app(Term::case_(), probe), zero_branch),
                   one_branch);
}

}  // namespace

Term compile_clopen_to_term(const ClopenSet& set, std::size_t depth_limit) {
  if (set.depth() > depth_limit)
    throw Error("clopen set depth " + std::to_string(set.depth()) +
                " exceeds the compilation limit " + std::to_string(depth_limit));
  std::string prefix;
  Term body = decision_tree(set, prefix, "f");
  return Term::lam("f", Type::arrow(Type::base(), Type::base()), body);
}

}  // namespace platek::eff
