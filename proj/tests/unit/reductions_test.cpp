#include <doctest.h>

#include <algorithm>
#include <set>

#include "platek/reductions.hpp"

#include "../common/testgen.hpp"

using namespace platek;
using namespace platek::eff;
namespace red = platek::reductions;
using platek::Rng;

namespace {
Rat absr(const Rat& r) { return r < 0 ? Rat(-r) : r; }
}  // namespace

TEST_CASE("rm_code_open: spec examples") {
  // O = (0,1): with denominators <= 2 the pairs are (0,1/2),(0,1),(1/2,1)
  IntervalUnion o = IntervalUnion::of(
      {Interval{rat_parse("0"), rat_parse("1"), false, false}});
  auto pairs = red::rm_code_open(o, 2);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == std::make_pair(rat_parse("0"), rat_parse("1/2")));
  CHECK(pairs[1] == std::make_pair(rat_parse("0"), rat_parse("1")));
  CHECK(pairs[2] == std::make_pair(rat_parse("1/2"), rat_parse("1")));

  CHECK(red::rm_code_open(IntervalUnion::empty(), 3).empty());
}

TEST_CASE("rm_code_open: sound and complete vs grid brute force") {
  Rng rng(0x2A0);
  for (int i = 0; i < 100; ++i) {
    IntervalUnion o = testgen::random_union(rng, 3, 8, false);
    const std::uint64_t D = 8;
    auto pairs = red::rm_code_open(o, D);
    // brute force over the same rational grid
    std::set<Rat> grid;
    for (std::uint64_t q = 1; q <= D; ++q)
      for (std::uint64_t p = 0; p <= q; ++p) grid.insert(Rat(Int(p), Int(q)));
    std::vector<Rat> points(grid.begin(), grid.end());
    std::vector<std::pair<Rat, Rat>> expected;
    for (std::size_t a = 0; a < points.size(); ++a) {
      for (std::size_t b = a + 1; b < points.size(); ++b) {
        // dense subcheck: (p,q) subset of O iff every grid point and every
        // midpoint of consecutive grid points inside (p,q) lies in O
        bool inside = true;
        for (std::size_t c = a; c + 1 <= b && inside; ++c) {
          if (c > a && !o.contains(points[c])) inside = false;
          Rat mid = (std::max(points[a], points[c]) + points[c + 1]) / 2;
          if (points[c + 1] > points[a] && !o.contains(mid)) inside = false;
        }
        if (inside) expected.emplace_back(points[a], points[b]);
      }
    }
    CHECK(pairs == expected);
  }
}

TEST_CASE("sup_usco: spec examples") {
  CHECK(red::sup_usco(StepFn::constant(rat_parse("3")), 4) == 3);
  CHECK(red::sup_usco(StepFn::constant(rat_parse("3")), 30) == 3);
  // usco spike at 1/2
  StepFn spike = StepFn::indicator_closed(rat_parse("1/2"), rat_parse("1/2"));
  Rat r = red::sup_usco(spike, 20);
  CHECK(absr(r - 1) <= pow2_inv(20));
  // non-usco input violates the precondition
  StepFn bad = StepFn::make({rat_parse("0"), rat_parse("1/2"), rat_parse("1")},
                            {rat_parse("1"), rat_parse("0")},
                            {rat_parse("1"), rat_parse("0"), rat_parse("0")});
  CHECK(!bad.is_usco());
  CHECK_THROWS_AS(red::sup_usco(bad, 4), PreconditionError);
}

TEST_CASE("sup_usco: accuracy and a monotone transcript, randomized") {
  Rng rng(0x50B);
  for (int i = 0; i < 200; ++i) {
    StepFn f = testgen::random_usco_stepfn(rng, 5, 10);
    std::vector<std::pair<Rat, bool>> transcript;
    Rat r = red::sup_usco(f, 20, {}, &transcript);
    CHECK(absr(r - f.sup_on(rat_parse("0"), rat_parse("1"))) <= pow2_inv(20));
    // once the level set is empty it stays empty for larger thresholds
    for (const auto& [ra, nea] : transcript)
      for (const auto& [rb, neb] : transcript)
        if (!nea && rb > ra) CHECK(!neb);
  }
}

TEST_CASE("select_clopen: spec examples") {
  auto bits = red::select_clopen(ClopenSet::full());
  CHECK(bits.empty());  // depth 0: the least point is 000...

  auto b2 = red::select_clopen(ClopenSet::from_leaves(2, {"11"}));
  CHECK(b2 == std::vector<std::uint8_t>{1, 1});

  CHECK_THROWS_AS(red::select_clopen(ClopenSet::empty()), EmptySetError);
}

TEST_CASE("select_clopen: equals lex_least; one query per level") {
  Rng rng(0x5E1);
  for (int i = 0; i < 300; ++i) {
    ClopenSet s = testgen::random_nonempty_clopen(rng, 6);
    red::ClopenEmptinessOracle oracle;
    auto bits = red::select_clopen(s, oracle);
    std::string rendered;
    for (auto b : bits) rendered += b ? '1' : '0';
    CHECK(rendered == s.lex_least());
    CHECK(oracle.queries == s.depth());
  }
}

TEST_CASE("moreau_env: spec examples") {
  // constant functions are their own envelope
  for (std::uint64_t n : {0ull, 1ull, 7ull}) {
    CHECK(red::moreau_env(StepFn::constant(rat_parse("2")), n,
                          rat_parse("1/3")) == 2);
  }
  // indicator of {0}: envelope max(0, 1 - n x)
  StepFn at0 = StepFn::indicator_closed(rat_parse("0"), rat_parse("0"));
  for (int g = 0; g <= 8; ++g) {
    Rat x = Rat(Int(g), Int(8));
    for (std::uint64_t n : {1ull, 2ull, 5ull}) {
      Rat expect = std::max(Rat(0), Rat(1) - Rat(Int(n)) * x);
      CHECK(red::moreau_env(at0, n, x) == expect);
    }
  }
}

TEST_CASE("moreau_env: decreasing in n, above f, Lipschitz; usco limit") {
  Rng rng(0x30E);
  for (int i = 0; i < 200; ++i) {
    StepFn f = testgen::random_stepfn(rng, 4, 8);
    Rat x = testgen::random_rat01(rng, 16);
    Rat y = testgen::random_rat01(rng, 16);
    std::uint64_t n = rng.below(6);
    Rat fn = red::moreau_env(f, n, x);
    Rat fn1 = red::moreau_env(f, n + 1, x);
    CHECK(fn >= fn1);
    CHECK(fn1 >= f.eval(x));
    // n-Lipschitz in x
    Rat fy = red::moreau_env(f, n, y);
    CHECK(absr(fn - fy) <= Rat(Int(n)) * absr(x - y));
  }

  // for usco f at rational x, f_n(x) converges to f(x); the threshold is
  // computable from the candidate gaps
  for (int i = 0; i < 50; ++i) {
    StepFn f = testgen::random_usco_stepfn(rng, 4, 8);
    Rat x = Rat(Int(rng.below(9)), Int(8));
    Rat fx = f.eval(x);
    Rat target = fx + pow2_inv(10);
    // explicit threshold: beat every candidate with positive distance
    Rat needed = 0;
    auto consider = [&](const Rat& value, const Rat& dist) {
      if (dist > 0 && value > target) {
        Rat n_min = (value - fx) / dist;  // beyond this the candidate is dead
        needed = std::max(needed, n_min);
      }
    };
    const auto& breaks = f.breakpoints();
    for (std::size_t j = 0; j < breaks.size(); ++j)
      consider(f.point_values()[j], absr(x - breaks[j]));
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
      Rat dist = 0;
      if (x < breaks[j])
        dist = breaks[j] - x;
      else if (x > breaks[j + 1])
        dist = x - breaks[j + 1];
      consider(f.piece_values()[j], dist);
    }
    std::uint64_t n = static_cast<std::uint64_t>(rat_floor(needed)) + 1;
    CHECK(red::moreau_env(f, n, x) - fx <= pow2_inv(10));
  }
}

TEST_CASE("urysohn: spec examples") {
  IntervalUnion c0 =
      IntervalUnion::of({Interval{rat_parse("0"), rat_parse("1/4"), true, true}});
  IntervalUnion c1 =
      IntervalUnion::of({Interval{rat_parse("3/4"), rat_parse("1"), true, true}});
  CHECK(red::urysohn(c0, c1, rat_parse("1/2")) == rat_parse("1/2"));
  CHECK(red::urysohn(c0, c1, rat_parse("1/8")) == 0);
  CHECK(red::urysohn(c0, c1, rat_parse("7/8")) == 1);

  // overlap is detected exactly
  IntervalUnion c2 =
      IntervalUnion::of({Interval{rat_parse("1/4"), rat_parse("1"), true, true}});
  CHECK_THROWS_AS(red::urysohn(c0, c2, rat_parse("1/2")), PreconditionError);
  CHECK_THROWS_AS(red::urysohn(IntervalUnion::empty(), c1, rat_parse("1/2")),
                  PreconditionError);
  IntervalUnion open_set = IntervalUnion::of(
      {Interval{rat_parse("0"), rat_parse("1/4"), true, false}});
  CHECK_THROWS_AS(red::urysohn(open_set, c1, rat_parse("1/2")),
                  PreconditionError);
}

TEST_CASE("urysohn: the iff property at random points") {
  Rng rng(0x0127);
  int instances = 0;
  while (instances < 50) {
    IntervalUnion c0 = testgen::random_nonempty_closed_union(rng, 3, 10);
    IntervalUnion c1 = testgen::random_nonempty_closed_union(rng, 3, 10);
    if (!IntervalUnion::set_intersect(c0, c1).is_empty()) continue;
    ++instances;
    for (int j = 0; j < 200; ++j) {
      Rat x = testgen::random_rat01(rng, 64);
      Rat h = red::urysohn(c0, c1, x);
      CHECK((h == 0) == c0.contains(x));
      CHECK((h == 1) == c1.contains(x));
      CHECK(h >= 0);
      CHECK(h <= 1);
    }
  }
}

TEST_CASE("measure_bisect: spec examples") {
  // C = [0,1]: l_n = 1 for all n
  IntervalUnion unit = IntervalUnion::unit();
  for (unsigned n : {0u, 1u, 4u, 8u}) CHECK(red::measure_bisect(unit, n) == 1);

  // C = {1/2}: every cell intersection has measure zero
  IntervalUnion point = IntervalUnion::of(
      {Interval{rat_parse("1/2"), rat_parse("1/2"), true, true}});
  for (unsigned n : {1u, 2u, 5u}) CHECK(red::measure_bisect(point, n) == 0);

  // clopen: exact at depth
  ClopenSet half = ClopenSet::from_leaves(1, {"0"});
  CHECK(red::measure_bisect(half, 0) == 1);
  CHECK(red::measure_bisect(half, 1) == rat_parse("1/2"));
  CHECK(red::measure_bisect(half, 5) == rat_parse("1/2"));
}

TEST_CASE("measure_bisect: error bound and monotone decrease, randomized") {
  Rng rng(0xB15);
  for (int i = 0; i < 100; ++i) {
    IntervalUnion c = testgen::random_nonempty_closed_union(rng, 3, 10);
    Rat prev;
    bool has_prev = false;
    for (unsigned n = 0; n <= 8; ++n) {
      Rat ln = red::measure_bisect(c, n);
      CHECK(ln >= c.measure());
      CHECK(ln - c.measure() <=
            Rat(Int(2 * c.components())) * pow2_inv(n));
      if (has_prev) CHECK(ln <= prev);
      prev = ln;
      has_prev = true;
    }
  }
  for (int i = 0; i < 100; ++i) {
    ClopenSet c = testgen::random_clopen(rng, 6);
    for (unsigned n = 0; n <= 8; ++n) {
      Rat ln = red::measure_bisect(c, n);
      CHECK(ln >= c.measure());
      if (n >= c.depth()) CHECK(ln == c.measure());
    }
  }
}

TEST_CASE("cantor_intersection: spec examples") {
  std::vector<ClopenSet> constant{ClopenSet::full(), ClopenSet::full()};
  CHECK(red::cantor_intersection(constant).empty());  // 000...

  // strictly shrinking dyadic cells share their prefix
  std::vector<ClopenSet> chain{ClopenSet::cylinder("1"),
                               ClopenSet::cylinder("10"),
                               ClopenSet::cylinder("101")};
  auto bits = red::cantor_intersection(chain);
  CHECK(bits == std::vector<std::uint8_t>{1, 0, 1});

  std::vector<ClopenSet> broken{ClopenSet::cylinder("1"),
                                ClopenSet::cylinder("0")};
  CHECK_THROWS_AS(red::cantor_intersection(broken), NestingViolated);
  std::vector<ClopenSet> with_empty{ClopenSet::cylinder("1"),
                                    ClopenSet::empty()};
  CHECK_THROWS_AS(red::cantor_intersection(with_empty), Error);
}

TEST_CASE("cantor_intersection: membership at every level, randomized") {
  Rng rng(0xCA7);
  for (int i = 0; i < 200; ++i) {
    // build a random nested chain by intersecting downward
    std::vector<ClopenSet> chain;
    ClopenSet cur = ClopenSet::full();
    for (int level = 0; level < 5; ++level) {
      ClopenSet next = ClopenSet::set_intersect(cur, testgen::random_clopen(rng, 5));
      if (next.is_empty()) break;
      chain.push_back(next);
      cur = next;
    }
    if (chain.empty()) continue;
    auto bits = red::cantor_intersection(chain);
    for (const ClopenSet& level : chain) CHECK(level.member(bits));
  }
}

TEST_CASE("decide_continuity_via_osc: spec examples and the independent check") {
  auto constant = red::decide_continuity_via_osc(StepFn::constant(rat_parse("1")));
  CHECK(constant.continuous);

  // unit jump at 1/2
  StepFn jump = StepFn::make({rat_parse("0"), rat_parse("1/2"), rat_parse("1")},
                             {rat_parse("0"), rat_parse("1")},
                             {rat_parse("0"), rat_parse("1"), rat_parse("1")});
  auto rep = red::decide_continuity_via_osc(jump);
  REQUIRE(!rep.continuous);
  CHECK(rep.witness == rat_parse("1/2"));
  CHECK(rep.oscillation == 1);
  CHECK(rep.k == 0);  // oscillation >= 1/2^0

  Rng rng(0xDEC1);
  for (int i = 0; i < 500; ++i) {
    StepFn f = testgen::random_stepfn(rng, 5, 10);
    // independent one-sided-limit continuity check
    bool cont = true;
    for (const Rat& x : f.breakpoints()) {
      if (x > 0 && f.left_limit(x) != f.eval(x)) cont = false;
      if (x < 1 && f.right_limit(x) != f.eval(x)) cont = false;
    }
    auto r = red::decide_continuity_via_osc(f);
    CHECK(r.continuous == cont);
    if (!r.continuous) {
      CHECK(f.osc_point(r.witness) == r.oscillation);
      CHECK(r.oscillation >= pow2_inv(r.k));
      CHECK((r.k == 0 || r.oscillation < pow2_inv(r.k - 1)));
    }
  }
}
