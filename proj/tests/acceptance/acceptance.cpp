// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "platek/corpus.hpp"
#include "platek/denot.hpp"
#include "platek/eff/bridge.hpp"
#include "platek/model.hpp"
#include "platek/optree.hpp"
#include "platek/parser.hpp"
#include "platek/pretty.hpp"
#include "platek/reductions.hpp"
#include "platek/subst.hpp"
#include "platek/typecheck.hpp"

#include "../common/testgen.hpp"

using namespace platek;
namespace red = platek::reductions;
using eff::ClopenSet;
using eff::Int;
using eff::IntervalUnion;
using eff::Rat;
using eff::StepFn;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<std::string()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (!detail.empty() && detail.rfind("FAIL", 0) == 0) ok = false;
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << label << " - " << detail << " (" << ms << " ms)" << std::endl;
  if (!ok) ++failures;
}

std::string fail(const std::string& why) { return "FAIL: " + why; }

Rat absr(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Fix-defined arithmetic used by the program suite.
const char* kAdd =
    "fix add:0->0->0. \\x:0. \\y:0. case x y (suc (add (pred x) y))";
const char* kSub =
    "fix sub:0->0->0. \\x:0. \\y:0. case y x (pred (sub x (pred y)))";

// ---------------------------------------------------------------------------

std::string run_thm_suite() {
  CorpusParams params;
  params.max_term_size = 7;
  params.type_rank_bound = 2;
  params.base_bound = 1;
  params.fuel = 10000;
  params.oracle_names = {"exists2", "mu"};
  OracleRegistry reg = OracleRegistry::builtins();
  OracleTable table;
  table.registry = &reg;
  FincheckReport rep = run_fincheck(params, table);
  if (!rep.clean()) {
    std::string first =
        rep.failures.empty() ? "?" : rep.failures[0].first + " : " +
                                         rep.failures[0].second;
    return fail(std::to_string(rep.disagree) + " disagree, " +
                std::to_string(rep.inconclusive) + " inconclusive; first " +
                first);
  }
  if (rep.budget_exceeded != 0)
    return fail(std::to_string(rep.budget_exceeded) + " budget-exceeded terms");
  std::ostringstream os;
  os << rep.total << " closed type-0 terms of size <= 7, all AGREE";
  return os.str();
}

std::string run_beta_suite() {
  OracleRegistry reg = OracleRegistry::builtins();
  OracleTable table;
  table.registry = &reg;
  Model m({1, 1'000'000});
  CorpusParams params;
  TermGen gen(0xBE7A2024, params, table);
  const Type base = Type::base();
  int done = 0;
  for (int i = 0; i < 1000; ++i) {
    Type sigma = gen.random_candidate_type();
    Term s = gen.closed_term(sigma, 6);
    Term t = gen.term_in_context(base, {{"y", sigma}}, 8);
    DomainElement sv = eval_fin(s, {}, m, table);
    Env env;
    env["y"] = sv;
    DomainElement lhs = eval_fin(substitute(t, "y", s), {}, m, table);
    DomainElement rhs = eval_fin(t, env, m, table);
    if (!m.equal(lhs, rhs))
      return fail("triple " + std::to_string(i) + ": t = " + pretty(t) +
                  ", s = " + pretty(s));
    ++done;
  }
  return std::to_string(done) + " seeded (t,y,s) triples, exact equality";
}

std::string run_enumeration_suite() {
  Model m({1, 1'000'000});
  const Type base = Type::base();
  const Type unary = Type::arrow(base, base);
  const Type rank2 = Type::arrow(unary, base);
  if (m.enumerate_partial(base).size() != 3) return fail("|HC(0)| != 3");
  if (m.enumerate_total(unary).size() != 4) return fail("|F(0->0)| != 4");
  if (m.enumerate_partial(unary).size() != 11) return fail("|HC(0->0)| != 11");
  if (m.enumerate_total(rank2).size() != 16)
    return fail("|F((0->0)->0)| != 16");

  std::uint64_t monotone_checked = 0;
  for (const Type& ty : {base, unary, rank2}) {
    for (const auto& e : m.enumerate_partial(ty)) {
      if (!m.is_monotone(e))
        return fail("non-monotone element in HC(" + ty.to_string() + ")");
      ++monotone_checked;
    }
  }

  // full pairwise partial-order scan on each space
  for (const Type& ty : {base, unary, rank2}) {
    const auto& elems = m.enumerate_partial(ty);
    const std::size_t n = elems.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!m.leq(elems[i], elems[i]))
        return fail("leq not reflexive on HC(" + ty.to_string() + ")");
      for (std::size_t j = 0; j < n; ++j) {
        bool ij = m.leq(elems[i], elems[j]);
        if (ij && i != j && m.leq(elems[j], elems[i]))
          return fail("leq not antisymmetric on HC(" + ty.to_string() + ")");
        if (!ij) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (m.leq(elems[j], elems[k]) && !m.leq(elems[i], elems[k]))
            return fail("leq not transitive on HC(" + ty.to_string() + ")");
      }
    }
  }
  return "counts 3/4/11/16; " + std::to_string(monotone_checked) +
         " elements monotone; leq a partial order on every space";
}

std::string run_lfp_suite() {
  Model m({1, 1'000'000});
  const Type base = Type::base();
  const Type unary = Type::arrow(base, base);
  const Type self1 = Type::arrow(unary, unary);  // HC(0->0) self-maps

  // every f in HC(0->0): lfp over HC(0)
  std::uint64_t count1 = 0;
  for (const auto& f : m.enumerate_partial(unary)) {
    DomainElement x = m.lfp(f);
    if (!m.equal(m.apply(f, x), x)) return fail("lfp not a fixed point at 0->0");
    for (const auto& y : m.enumerate_partial(base))
      if (m.equal(m.apply(f, y), y) && !m.leq(x, y))
        return fail("lfp not least at 0->0");
    ++count1;
  }

  // every f in HC((0->0)->(0->0)): streamed; fixed points scanned over
  // the 11 elements of HC(0->0)
  const auto& hc_unary = m.enumerate_partial(unary);
  std::uint64_t count2 = 0;
  std::string error;
  m.for_each_partial(self1, [&](const DomainElement& f) {
    DomainElement x = m.lfp(f);
    if (!m.equal(m.apply(f, x), x)) {
      error = "lfp not a fixed point at (0->0)->(0->0)";
      return false;
    }
    for (const auto& y : hc_unary) {
      if (m.equal(m.apply(f, y), y) && !m.leq(x, y)) {
        error = "lfp not least at (0->0)->(0->0)";
        return false;
      }
    }
    ++count2;
    return true;
  });
  if (!error.empty()) return fail(error);
  if (count2 != 642723)
    return fail("expected 642723 elements of HC((0->0)->(0->0)), saw " +
                std::to_string(count2));
  return std::to_string(count1) + " + " + std::to_string(count2) +
         " functions: lfp is a fixed point and least among fixed points";
}

std::string run_program_suite() {
  OracleRegistry reg = OracleRegistry::builtins();
  OracleTable table;
  table.registry = &reg;
  EvalSettings inf;  // infinite model
  inf.fuel = 100000;

  // addition and truncated subtraction on all arguments <= 5
  for (std::uint64_t x = 0; x <= 5; ++x) {
    for (std::uint64_t y = 0; y <= 5; ++y) {
      Term add = parse(std::string("(") + kAdd + ") " + std::to_string(x) +
                       " " + std::to_string(y));
      EvalReport ra = eval_op(add, inf, table);
      if (!ra.outcome.is_value() || ra.outcome.value != x + y)
        return fail("add " + std::to_string(x) + " " + std::to_string(y));
      Term sub = parse(std::string("(") + kSub + ") " + std::to_string(x) +
                       " " + std::to_string(y));
      EvalReport rs = eval_op(sub, inf, table);
      std::uint64_t expect = x > y ? x - y : 0;
      if (!rs.outcome.is_value() || rs.outcome.value != expect)
        return fail("sub " + std::to_string(x) + " " + std::to_string(y));
    }
  }

  // 100 seeded mu programs with in-bound witnesses: f(n) = |n-k| via
  // truncated subtraction both ways; least zero is exactly k
  Rng rng(0x123);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t k = rng.below(26);
    std::string kk = std::to_string(k);
    std::string fsrc = std::string("\\n:0. (") + kAdd + ") ((" + kSub +
                       ") n " + kk + ") ((" + kSub + ") " + kk + " n)";
    Term prog = Term::app(Term::oracle("mu"), parse(fsrc));
    EvalReport r = eval_op(prog, inf, table);
    if (!r.outcome.is_value() || r.outcome.value != k)
      return fail("mu instance " + std::to_string(i) + " (k=" + kk + "): " +
                  r.outcome.to_string());
    if (r.approximation) return fail("mu instance flagged approximate");
  }

  // pure divergence at large fuel
  EvalSettings big;
  big.fuel = 1'000'000;
  EvalReport div = eval_op(parse("fix x:0. x"), big, table);
  if (div.outcome.kind != OutcomeKind::NoValue ||
      div.outcome.consumed != 1'000'000)
    return fail("fix x:0. x should exhaust 10^6 fuel");
  return "add/sub exact on arguments <= 5; 100 mu programs return the least "
         "zero; divergence holds at fuel 10^6";
}

std::string run_omega_suite() {
  OracleRegistry reg = OracleRegistry::builtins();
  Rng rng(0x0E6A);
  int nonempty = 0;
  for (int i = 0; i < 1000; ++i) {
    ClopenSet s = testgen::random_clopen(rng, 6);
    OracleTable table;
    table.registry = &reg;
    table.configs.by_name["omegaC"].entries["promisedDepth"] =
        std::to_string(s.depth());
    Term program =
        Term::app(Term::oracle("omegaC"), eff::compile_clopen_to_term(s));
    EvalSettings settings;
    settings.fuel = 200000;
    EvalReport r = eval_op(program, settings, table);
    if (!r.outcome.is_value())
      return fail("omegaC run " + std::to_string(i) + ": " +
                  r.outcome.to_string());
    std::uint64_t expect = s.is_empty() ? 0 : 1;
    if (r.outcome.value != expect)
      return fail("omegaC disagrees with is_empty on instance " +
                  std::to_string(i));
    if (!s.is_empty()) ++nonempty;
  }

  // omegaB: violation exactly on multi-member fixtures.  Members here are
  // the eventually-zero points the search probes, i.e. the leaves at the
  // promised depth.
  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    ClopenSet s = testgen::random_clopen(rng, 5);
    std::size_t probe_depth = std::max<std::size_t>(s.depth(), 1);
    std::size_t real_members =
        s.is_empty() ? 0 : s.leaves_at(probe_depth).size();
    OracleTable table;
    table.registry = &reg;
    table.configs.by_name["omegaB"].entries["promisedDepth"] =
        std::to_string(probe_depth);
    Term program =
        Term::app(Term::oracle("omegaB"), eff::compile_clopen_to_term(s));
    EvalSettings settings;
    settings.fuel = 200000;
    EvalReport r = eval_op(program, settings, table);
    bool multi = real_members >= 2;
    if (multi) {
      if (r.outcome.kind != OutcomeKind::Refusal)
        return fail("omegaB missed a promise violation on instance " +
                    std::to_string(i));
      ++violations;
    } else {
      if (!r.outcome.is_value() ||
          r.outcome.value != (real_members == 0 ? 0u : 1u))
        return fail("omegaB wrong on a lawful instance " + std::to_string(i));
    }
  }
  if (violations == 0) return fail("no multi-member fixtures were generated");
  return "1000 omegaC round trips match is_empty; omegaB flagged " +
         std::to_string(violations) + " violations and no false alarms";
}

std::string run_reduction_suite() {
  Rng rng(0x7ED0);
  const Rat zero(0), one(1);

  // sup_usco within 2^-20 of the exact scan
  for (int i = 0; i < 200; ++i) {
    StepFn f = testgen::random_usco_stepfn(rng, 5, 10);
    Rat r = red::sup_usco(f, 20);
    if (absr(r - f.sup_on(zero, one)) > eff::pow2_inv(20))
      return fail("sup_usco accuracy, instance " + std::to_string(i));
  }

  // rm_code_open sound and complete at denominator bound 8
  {
    std::set<Rat> grid;
    for (std::uint64_t q = 1; q <= 8; ++q)
      for (std::uint64_t p = 0; p <= q; ++p) grid.insert(Rat(Int(p), Int(q)));
    std::vector<Rat> points(grid.begin(), grid.end());
    for (int i = 0; i < 200; ++i) {
      IntervalUnion o = testgen::random_union(rng, 3, 8, false);
      auto pairs = red::rm_code_open(o, 8);
      std::set<std::pair<Rat, Rat>> got(pairs.begin(), pairs.end());
      for (std::size_t a = 0; a < points.size(); ++a) {
        for (std::size_t b = a + 1; b < points.size(); ++b) {
          // exact test: (p,q) subset of O
          eff::Interval pq{points[a], points[b], false, false};
          bool subset = IntervalUnion::set_intersect(o.complement_in_unit(),
                                                     IntervalUnion::of({pq}))
                            .is_empty();
          if (subset != got.count({points[a], points[b]}))
            return fail("rm_code_open mismatch, instance " + std::to_string(i));
        }
      }
    }
  }

  // select_clopen equals lex_least
  for (int i = 0; i < 200; ++i) {
    ClopenSet s = testgen::random_nonempty_clopen(rng, 6);
    auto bits = red::select_clopen(s);
    std::string rendered;
    for (auto b : bits) rendered += b ? '1' : '0';
    if (rendered != s.lex_least())
      return fail("select_clopen vs lex_least, instance " + std::to_string(i));
  }

  // moreau: f_n >= f_{n+1} >= f pointwise and n-Lipschitz spot checks
  for (int i = 0; i < 200; ++i) {
    StepFn f = testgen::random_stepfn(rng, 4, 8);
    Rat x = testgen::random_rat01(rng, 32);
    Rat y = testgen::random_rat01(rng, 32);
    std::uint64_t n = rng.below(8);
    Rat a = red::moreau_env(f, n, x);
    Rat b = red::moreau_env(f, n + 1, x);
    if (!(a >= b)) return fail("moreau not decreasing in n");
    if (!(b >= f.eval(x))) return fail("moreau below f");
    if (absr(a - red::moreau_env(f, n, y)) > Rat(Int(n)) * absr(x - y))
      return fail("moreau not n-Lipschitz");
  }

  // urysohn iff-property at 200 sample points per instance
  {
    int instances = 0;
    while (instances < 200) {
      IntervalUnion c0 = testgen::random_nonempty_closed_union(rng, 3, 10);
      IntervalUnion c1 = testgen::random_nonempty_closed_union(rng, 3, 10);
      if (!IntervalUnion::set_intersect(c0, c1).is_empty()) continue;
      ++instances;
      for (int j = 0; j < 200; ++j) {
        Rat x = testgen::random_rat01(rng, 64);
        Rat h = red::urysohn(c0, c1, x);
        if ((h == 0) != c0.contains(x) || (h == 1) != c1.contains(x) ||
            h < 0 || h > 1)
          return fail("urysohn iff-property, instance " +
                      std::to_string(instances));
      }
    }
  }

  // measure_bisect: error bound and monotone non-increase
  for (int i = 0; i < 200; ++i) {
    IntervalUnion c = testgen::random_nonempty_closed_union(rng, 3, 10);
    Rat prev;
    bool has_prev = false;
    for (unsigned n = 0; n <= 9; ++n) {
      Rat ln = red::measure_bisect(c, n);
      if (ln < c.measure()) return fail("measure_bisect below the measure");
      if (ln - c.measure() > Rat(Int(2 * c.components())) * eff::pow2_inv(n))
        return fail("measure_bisect error bound, instance " +
                    std::to_string(i));
      if (has_prev && ln > prev) return fail("measure_bisect not monotone");
      prev = ln;
      has_prev = true;
    }
  }

  // continuity decision agrees with the one-sided-limit oracle
  for (int i = 0; i < 200; ++i) {
    StepFn f = testgen::random_stepfn(rng, 5, 10);
    bool cont = true;
    for (const Rat& x : f.breakpoints()) {
      if (x > 0 && f.left_limit(x) != f.eval(x)) cont = false;
      if (x < 1 && f.right_limit(x) != f.eval(x)) cont = false;
    }
    if (red::decide_continuity_via_osc(f).continuous != cont)
      return fail("continuity decision, instance " + std::to_string(i));
  }

  // variation matches the partition brute force
  for (int i = 0; i < 200; ++i) {
    StepFn g = testgen::random_stepfn(rng, 4, 8);
    std::vector<Rat> pts;
    for (std::size_t j = 0; j < g.breakpoints().size(); ++j) {
      pts.push_back(g.breakpoints()[j]);
      if (j + 1 < g.breakpoints().size())
        pts.push_back((g.breakpoints()[j] + g.breakpoints()[j + 1]) / 2);
    }
    Rat best = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << pts.size()); ++mask) {
      Rat sum = 0;
      bool have_prev = false;
      Rat prev;
      for (std::size_t b = 0; b < pts.size(); ++b) {
        if (!(mask & (1ULL << b))) continue;
        Rat v = g.eval(pts[b]);
        if (have_prev) sum += absr(v - prev);
        prev = v;
        have_prev = true;
      }
      if (sum > best) best = sum;
    }
    if (g.variation() != best)
      return fail("variation brute force, instance " + std::to_string(i));
  }

  // cantor intersection: membership at every level
  int chains = 0;
  while (chains < 200) {
    std::vector<ClopenSet> chain;
    ClopenSet cur = ClopenSet::full();
    for (int level = 0; level < 5; ++level) {
      ClopenSet next =
          ClopenSet::set_intersect(cur, testgen::random_clopen(rng, 5));
      if (next.is_empty()) break;
      chain.push_back(next);
      cur = next;
    }
    if (chain.empty()) continue;
    ++chains;
    auto bits = red::cantor_intersection(chain);
    for (const ClopenSet& level : chain)
      if (!level.member(bits))
        return fail("cantor intersection membership, chain " +
                    std::to_string(chains));
  }

  return "9 reduction suites x >= 200 seeded instances, zero failures";
}

}  // namespace

int main() {
  std::cout << "platek acceptance suite\n";
  criterion(1, "denotational = operational on the exhaustive size-7 corpus",
            run_thm_suite);
  criterion(2, "beta lemma on 1000 seeded triples", run_beta_suite);
  criterion(3, "enumeration counts and order axioms at N=1",
            run_enumeration_suite);
  criterion(4, "least fixed points over HC(0->0) and HC((0->0)->(0->0))",
            run_lfp_suite);
  criterion(5, "program suite in the infinite model", run_program_suite);
  criterion(6, "omega oracles vs clopen emptiness round trip",
            run_omega_suite);
  criterion(7, "reduction suites against their brute-force oracles",
            run_reduction_suite);
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
