#include <doctest.h>

#include "platek/corpus.hpp"
#include "platek/optree.hpp"
#include "platek/parser.hpp"
#include "platek/treeio.hpp"
#include "platek/typecheck.hpp"

using namespace platek;

namespace {
struct Fixture {
  OracleRegistry reg = OracleRegistry::builtins();
  OracleTable table;
  Fixture() { table.registry = &reg; }

  EvalReport run(const std::string& src, std::uint64_t fuel = 100000,
                 Model* finite = nullptr) {
    EvalSettings s;
    s.fuel = fuel;
    s.finite = finite;
    return eval_op(parse(src), s, table);
  }
};
}  // namespace

TEST_CASE("eval_op: spec examples") {
  Fixture fx;
  // case decision
  EvalReport r1 = fx.run("case 0 (suc 0) 0");
  CHECK(r1.outcome.is_value());
  CHECK(r1.outcome.value == 1);

  // one beta step
  EvalReport r2 = fx.run("(\\x:0. suc x) 0");
  CHECK(r2.outcome.value == 1);

  // pure divergence: fuel is spent completely
  EvalReport r3 = fx.run("fix x:0. x", 100);
  CHECK(r3.outcome.kind == OutcomeKind::NoValue);
  CHECK(r3.outcome.consumed == 100);
  CHECK(r3.steps_used == 100);
}

TEST_CASE("eval_op: mu finds the least zero") {
  Fixture fx;
  // f(n) = 0 first at n = 3
  EvalReport r = fx.run(
      "#mu (\\n:0. case n 1 (case (pred n) 1 (case (pred (pred n)) 1 0)))");
  CHECK(r.outcome.is_value());
  CHECK(r.outcome.value == 3);
  CHECK(r.stats.oracle_queries == 4);  // queried 0,1,2,3
  CHECK(!r.approximation);
}

TEST_CASE("eval_op: approximation flags on the unverified branch") {
  Fixture fx;
  // constantly 1: exists2 answers 1 only up to the search bound
  EvalReport r = fx.run("#exists2 (\\n:0. 1)");
  CHECK(r.outcome.value == 1);
  CHECK(r.approximation);
  CHECK(!r.notes.empty());

  // with an in-bound witness there is nothing approximate
  EvalReport r2 = fx.run("#exists2 (\\n:0. case n 1 0)");
  CHECK(r2.outcome.value == 0);
  CHECK(!r2.approximation);

  // mu with no zero defaults to 0, flagged in the infinite model
  EvalReport r3 = fx.run("#mu (\\n:0. 1)");
  CHECK(r3.outcome.value == 0);
  CHECK(r3.approximation);
}

TEST_CASE("eval_op: finite model is exact, no flags") {
  Fixture fx;
  Model m({1, 1'000'000});
  EvalReport r = fx.run("#exists2 (\\n:0. 1)", 100000, &m);
  CHECK(r.outcome.value == 1);
  CHECK(!r.approximation);  // the scan n <= N is exhaustive in-model
  EvalReport r2 = fx.run("#mu (\\n:0. 1)", 100000, &m);
  CHECK(r2.outcome.value == 0);  // the no-zero clause, exactly
  CHECK(!r2.approximation);
}

TEST_CASE("eval_op: suc leaves the finite window") {
  Fixture fx;
  Model m({1, 1'000'000});
  EvalReport r = fx.run("suc 1", 1000, &m);
  CHECK(r.outcome.kind == OutcomeKind::NoValue);
  CHECK(r.steps_used < 1000);  // provably no value, fuel not exhausted
  EvalReport inf = fx.run("suc 1", 1000);
  CHECK(inf.outcome.value == 2);
}

TEST_CASE("eval_op: ill-typed or open inputs are stuck") {
  Fixture fx;
  CHECK(fx.run("x").outcome.kind == OutcomeKind::Stuck);
  CHECK(fx.run("0 0").outcome.kind == OutcomeKind::Stuck);
  CHECK(fx.run("suc").outcome.kind == OutcomeKind::Stuck);
  CHECK(fx.run("#nosuch 0").outcome.kind == OutcomeKind::Stuck);
}

TEST_CASE("determinism: identical runs yield identical reports") {
  Fixture fx;
  const char* src = "#exists2 (\\n:0. case n 1 0)";
  EvalReport a = fx.run(src);
  EvalReport b = fx.run(src);
  CHECK(a.outcome.to_string() == b.outcome.to_string());
  CHECK(a.steps_used == b.steps_used);
  CHECK(a.stats.nodes == b.stats.nodes);
  CHECK(a.stats.max_depth == b.stats.max_depth);
  CHECK(a.stats.oracle_queries == b.stats.oracle_queries);
}

TEST_CASE("fuel monotonicity") {
  Fixture fx;
  Model m({1, 1'000'000});
  CorpusParams params;
  params.max_term_size = 6;
  std::vector<Term> corpus = enumerate_closed_terms(params, fx.table);
  int valued = 0;
  for (std::size_t i = 0; i < corpus.size(); i += 7) {  // sample the corpus
    EvalSettings lo;
    lo.finite = &m;
    lo.fuel = 40;
    EvalReport a = eval_op(corpus[i], lo, fx.table);
    if (!a.outcome.is_value()) continue;
    for (std::uint64_t fuel : {41ull, 100ull, 10000ull}) {
      EvalSettings hi;
      hi.finite = &m;
      hi.fuel = fuel;
      EvalReport b = eval_op(corpus[i], hi, fx.table);
      REQUIRE(b.outcome.is_value());
      CHECK(b.outcome.value == a.outcome.value);
    }
    ++valued;
  }
  CHECK(valued > 50);
}

TEST_CASE("build_tree: beta step has exactly one child") {
  Fixture fx;
  EvalSettings s;
  s.fuel = 1000;
  CompTree tree = build_tree(parse("(\\x:0. suc x) 0"), s, fx.table, {});
  REQUIRE(!tree.nodes.empty());
  const CompNode& root = tree.nodes[tree.root];
  CHECK(root.kind == NodeKind::BetaStep);
  CHECK(root.children.size() == 1);
  CHECK(root.outcome.value == 1);
  // the contracted term is the child
  CHECK(tree.nodes[root.children[0]].term_text == "suc 0");
}

TEST_CASE("build_tree: fix step has exactly one child") {
  Fixture fx;
  EvalSettings s;
  s.fuel = 10;
  CompTree tree = build_tree(parse("fix x:0. x"), s, fx.table, {});
  const CompNode& root = tree.nodes[tree.root];
  CHECK(root.kind == NodeKind::FixStep);
  CHECK(root.children.size() == 1);
  CHECK(root.outcome.kind == OutcomeKind::NoValue);
}

TEST_CASE("build_tree: finite oracle branching factor is the total count") {
  Fixture fx;
  Model m({1, 1'000'000});
  EvalSettings s;
  s.fuel = 10000;
  s.finite = &m;
  CompTree tree = build_tree(parse("#exists2 (\\n:0. 0)"), s, fx.table, {});
  const CompNode& root = tree.nodes[tree.root];
  CHECK(root.kind == NodeKind::OracleApp);
  // |F(0)| = 2 at N=1: exactly two predecessors
  CHECK(root.children.size() == 2);
  CHECK(root.outcome.value == 0);
  CHECK(root.annotation.find("branching 2") != std::string::npos);

  // in the infinite model the same application is demand driven
  EvalSettings inf;
  inf.fuel = 10000;
  CompTree tree2 = build_tree(parse("#exists2 (\\n:0. 0)"), inf, fx.table, {});
  const CompNode& root2 = tree2.nodes[tree2.root];
  CHECK(root2.kind == NodeKind::OracleApp);
  CHECK(root2.children.size() == 1);  // first query already hits 0
}

TEST_CASE("build_tree: truncation markers under tight limits") {
  Fixture fx;
  EvalSettings s;
  s.fuel = 100;
  TreeLimits limits;
  limits.max_nodes = 1;
  CompTree tree = build_tree(parse("(\\x:0. suc x) 0"), s, fx.table, limits);
  REQUIRE(tree.nodes.size() >= 2);
  bool marker = false;
  for (const CompNode& n : tree.nodes)
    if (n.kind == NodeKind::Truncated && n.truncated) marker = true;
  CHECK(marker);
  // outcomes agree with the unrestricted evaluation
  CHECK(tree.nodes[tree.root].outcome.value == 1);
}

TEST_CASE("tree exports: text field order, json, dot") {
  Fixture fx;
  EvalSettings s;
  s.fuel = 1000;
  CompTree tree = build_tree(parse("(\\x:0. suc x) 0"), s, fx.table, {});
  std::string text = export_tree_text(tree);
  CHECK(text.find("# platek computation tree v1") == 0);
  CHECK(text.find("node 0 parent - kind BetaStep outcome value:1 term") !=
        std::string::npos);
  std::string json = export_tree_json(tree);
  CHECK(json.find("\"kind\": \"BetaStep\"") != std::string::npos);
  std::string dot = export_tree_dot(tree);
  CHECK(dot.find("digraph comptree") == 0);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
}

TEST_CASE("check_equiv: spec examples") {
  Fixture fx;
  Model m({1, 1'000'000});
  AgreementReport a = check_equiv(parse("suc 0"), m, fx.table, 1000);
  CHECK(a.verdict == Verdict::Agree);
  CHECK(a.denot_defined);
  CHECK(a.denot_value == 1);

  AgreementReport b = check_equiv(parse("fix x:0. x"), m, fx.table, 1000);
  CHECK(b.verdict == Verdict::Agree);
  CHECK(!b.denot_defined);
  CHECK(b.operational.kind == OutcomeKind::NoValue);
}

TEST_CASE("staged oracle: a two-argument plugin in the finite model") {
  // sig (0->0) -> (0->0) -> 0; answers f(0) + g(1), exercising the
  // xi-continuation path of the finite rule.
  struct TwoArg : OraclePlugin {
    const std::string& name() const override {
      static const std::string n = "pair2";
      return n;
    }
    const Type& signature() const override {
      static const Type u = Type::arrow(Type::base(), Type::base());
      static const Type t = Type::arrow(u, Type::arrow(u, Type::base()));
      return t;
    }
    PluginAnswer answer(const std::vector<QueryHandle*>& handles,
                        const OracleConfig&,
                        const PluginContext&) const override {
      Outcome a = handles.at(0)->apply({QueryArg::natural(0)});
      Outcome b = handles.at(1)->apply({QueryArg::natural(1)});
      if (!a.is_value() || !b.is_value())
        return PluginAnswer::blocked(a.is_value() ? b : a);
      return PluginAnswer::value_of(a.value + b.value);
    }
  };

  OracleRegistry reg = OracleRegistry::builtins();
  reg.add(std::make_shared<TwoArg>());
  OracleTable table;
  table.registry = &reg;

  Model m({1, 1'000'000});
  EvalSettings s;
  s.fuel = 10000;
  s.finite = &m;
  // f = identity (f(0)=0), g = \n. case n 0 1 (g(1)=1): answer 0 + 1 = 1
  Term t = parse("#pair2 (\\n:0. n) (\\n:0. case n 0 1)");
  EvalReport r = eval_op(t, s, table);
  CHECK(r.outcome.is_value());
  CHECK(r.outcome.value == 1);

  // the tree stages: root consumes f's totals, continuation consumes g's
  CompTree tree = build_tree(t, s, table, {});
  const CompNode& root = tree.nodes[tree.root];
  CHECK(root.kind == NodeKind::OracleApp);
  CHECK(root.children.size() == 3);  // 2 predecessors + the continuation
  const CompNode& cont = tree.nodes[root.children.back()];
  CHECK(cont.kind == NodeKind::OracleApp);
  CHECK(cont.children.size() == 2);

  // denotational agreement through check_equiv as well
  AgreementReport agree = check_equiv(t, m, table, 10000);
  CHECK(agree.verdict == Verdict::Agree);
  CHECK(agree.denot_value == 1);

  // infinite model: both handles satisfied demand-driven
  EvalSettings inf;
  inf.fuel = 10000;
  EvalReport r2 = eval_op(t, inf, table);
  CHECK(r2.outcome.value == 1);
}

TEST_CASE("subject reduction along every recorded edge") {
  // Every node of a computation tree snapshots a closed term of type 0,
  // including oracle predecessors built from semantic constants.
  Fixture fx;
  Model m({1, 1'000'000});
  TypingContext ctx = fx.table.typing_context();
  CorpusParams params;
  params.max_term_size = 5;
  std::vector<Term> corpus = enumerate_closed_terms(params, fx.table);
  std::size_t nodes_checked = 0;
  for (std::size_t i = 0; i < corpus.size(); i += 3) {
    EvalSettings s;
    s.finite = &m;
    s.fuel = 200;
    CompTree tree = build_tree(corpus[i], s, fx.table, {});
    for (const CompNode& n : tree.nodes) {
      if (n.truncated) continue;
      CHECK(n.term.is_closed());
      CHECK(typecheck(n.term, ctx) == Type::base());
      ++nodes_checked;
    }
  }
  CHECK(nodes_checked > 200);
}

TEST_CASE("finite oracle with a diverging predecessor has no value") {
  Fixture fx;
  Model m({1, 1'000'000});
  EvalSettings s;
  s.fuel = 3000;
  s.finite = &m;
  EvalReport r = eval_op(parse("#exists2 (\\n:0. fix x:0. x)"), s, fx.table);
  CHECK(r.outcome.kind == OutcomeKind::NoValue);
  // denotationally bottom too
  AgreementReport a =
      check_equiv(parse("#exists2 (\\n:0. fix x:0. x)"), m, fx.table, 3000);
  CHECK(a.verdict == Verdict::Agree);
}
