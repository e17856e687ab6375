#include <doctest.h>

#include <set>

#include "nflab/structure.hpp"
#include "table1.hpp"

using namespace nflab;

namespace {

NeighborhoodRelation complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return make_custom(n, edges, "complete" + std::to_string(n));
}

}  // namespace

TEST_CASE("hypercube, ring, and custom constructors") {
  NeighborhoodRelation hc2 = make_hypercube(2);
  std::set<std::pair<int, int>> expected{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  auto edges = hc2.edges();
  CHECK(std::set<std::pair<int, int>>(edges.begin(), edges.end()) == expected);

  CHECK(make_ring(4).edges().size() == 4);
  CHECK(make_ring(5).edges().size() == 5);
  CHECK_THROWS_AS(make_ring(2), InputError);

  NeighborhoodRelation custom = make_custom(4, {{2, 1}, {1, 2}, {0, 3}});
  CHECK(custom.neighbors(1, 2));
  CHECK(custom.neighbors(2, 1));
  CHECK(custom.neighbors(3, 0));
  CHECK_FALSE(custom.neighbors(0, 1));
  CHECK_THROWS_AS(make_custom(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(make_custom(3, {{0, 5}}), InputError);
}

TEST_CASE("non-triviality") {
  CHECK(is_nontrivial(make_hypercube(2)));
  CHECK_FALSE(is_nontrivial(complete(4)));
  CHECK_FALSE(is_nontrivial(make_custom(4, {})));
}

TEST_CASE("non-trivial relations admit a symmetry-breaking permutation") {
  for (const NeighborhoodRelation& n :
       {make_hypercube(2), make_hypercube(3), make_ring(4), make_ring(5),
        make_ring(6), make_ring(7), make_ring(8)}) {
    Permutation pi = find_noninvariant_permutation(n);
    CHECK(breaks_edge_set(n, pi));
  }
  CHECK_THROWS_AS(find_noninvariant_permutation(complete(4)), NoWitness);
  CHECK_THROWS_AS(find_noninvariant_permutation(make_custom(3, {})), NoWitness);
}

TEST_CASE("steepness and diameter") {
  NeighborhoodRelation hc2 = make_hypercube(2);
  CostMetric d = CostMetric::absolute_difference();
  CostDomain bools = t1::bool2();

  CHECK(steepness(t1::f(6), bools, hc2, d) == 1);
  CHECK(diameter(t1::f(6), bools, d) == 1);

  ObjectiveFunction constant{{0, 0, 0, 0}, 2};
  CHECK(steepness(constant, bools, hc2, d) == 0);
  CHECK(diameter(constant, bools, d) == 0);

  // one value change on a ring: the two incident edges carry the gap
  ObjectiveFunction bump{{0, 0, 1, 0, 0}, 2};
  CHECK(steepness(bump, bools, make_ring(5), d) == 1);

  CHECK_THROWS_AS(steepness(constant, bools, make_custom(4, {}), d), InputError);
}

TEST_CASE("steepness never exceeds diameter") {
  NeighborhoodRelation hc2 = make_hypercube(2);
  CostMetric d = CostMetric::absolute_difference();
  CostDomain three = CostDomain::integer_range(3);
  FunctionEnumerator en(4, 3);
  std::vector<int> t;
  while (en.next(t)) {
    ObjectiveFunction f{t, 3};
    CHECK(steepness(f, three, hc2, d) <= diameter(f, three, d));
  }
}

TEST_CASE("local minima counts") {
  NeighborhoodRelation hc2 = make_hypercube(2);
  CHECK(local_minima_count(t1::f(6), hc2) == 2);  // both parity functions
  CHECK(local_minima_count(t1::f(9), hc2) == 2);
  CHECK(local_minima_count(ObjectiveFunction{{0, 0, 0, 0}, 2}, hc2) == 0);
  CHECK(local_minima_count(t1::f(1), hc2) == 0);  // its 0-plateau blocks strictness
  CHECK(local_minima_count(t1::f(14), hc2) == 1);  // single 0 at point 00
}

TEST_CASE("l_max is the orbit maximum and orbit-constant") {
  NeighborhoodRelation hc2 = make_hypercube(2);
  CHECK(l_max(t1::f(6), hc2) == 2);
  CHECK(l_max(t1::f(3), hc2) == 2);  // same basis class as f6

  for (int j : {3, 5, 6, 9, 10, 12}) {
    CHECK(l_max(t1::f(j), hc2) == 2);
    CHECK(local_minima_count(t1::f(j), hc2) <= 2);
  }
  // the bound is attained inside the orbit
  bool attained = false;
  for (int j : {3, 5, 6, 9, 10, 12})
    if (local_minima_count(t1::f(j), hc2) == 2) attained = true;
  CHECK(attained);

  Guards tiny;
  tiny.max_orbit = 2;
  CHECK_THROWS_AS(l_max(t1::f(3), hc2, tiny), GuardExceeded);
}

TEST_CASE("structure analyzer caches per histogram") {
  StructureAnalyzer analyzer(t1::bool2(), make_hypercube(2),
                             CostMetric::absolute_difference());
  StructureReport r = analyzer.report(t1::f(6));
  CHECK(r.s_max == 1);
  CHECK(r.d_max == 1);
  CHECK(r.local_minima == 2);
  CHECK(r.l_max == 2);
  StructureReport r2 = analyzer.report(t1::f(5));
  CHECK(r2.local_minima == 0);
  CHECK(r2.l_max == 2);
}

TEST_CASE("minima-bounded class on the 2-cube is not c.u.p.") {
  ConstrainedClassResult res = constrained_class(
      t1::space4(), t1::bool2(), ConstraintKind::MinimaBound, Rational(1),
      make_hypercube(2), CostMetric::absolute_difference());
  CHECK(res.members.size() == 14);  // everything except the two parity tables
  CHECK_FALSE(res.members.contains(t1::table(6)));
  CHECK_FALSE(res.members.contains(t1::table(9)));
  CHECK(res.max_l_max == 2);
  REQUIRE_FALSE(res.cup.cup);
  const CupWitness& w = *res.cup.witness;
  CHECK(res.members.contains(w.function_table));
  CHECK_FALSE(res.members.contains(w.missing_table));
  CHECK(compose(ObjectiveFunction{w.function_table, 2}, w.pi).table ==
        w.missing_table);
}

TEST_CASE("steepness-bounded class over three cost values is not c.u.p.") {
  ConstrainedClassResult res = constrained_class(
      t1::space4(), CostDomain::integer_range(3), ConstraintKind::SteepnessBound,
      Rational(1), make_hypercube(2), CostMetric::absolute_difference());
  CHECK(res.members.size() > 0);
  CHECK(res.max_diameter == 2);
  CHECK_FALSE(res.cup.cup);
}

TEST_CASE("degenerate bounds are rejected") {
  // bound 0 keeps only constants, whose diameter is 0: not strictly below
  CHECK_THROWS_AS(
      constrained_class(t1::space4(), t1::bool2(), ConstraintKind::SteepnessBound,
                        Rational(0), make_hypercube(2),
                        CostMetric::absolute_difference()),
      InputError);
  CHECK_THROWS_AS(
      constrained_class(t1::space4(), t1::bool2(), ConstraintKind::SteepnessBound,
                        Rational(-1), make_hypercube(2),
                        CostMetric::absolute_difference()),
      EmptyClass);
}

TEST_CASE("cost metric axioms hold on a finite domain") {
  CostMetric d = CostMetric::absolute_difference();
  CostDomain dom;
  dom.values = {Rational(-1, 2), Rational(0), Rational(1, 3), Rational(2)};
  for (const auto& a : dom.values)
    for (const auto& b : dom.values) {
      CHECK(d.distance(a, b) == d.distance(b, a));
      CHECK((d.distance(a, b) == 0) == (a == b));
      for (const auto& c : dom.values)
        CHECK(d.distance(a, c) <= d.distance(a, b) + d.distance(b, c));
    }
}
