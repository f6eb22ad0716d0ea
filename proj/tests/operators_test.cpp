#include <doctest.h>

#include "oracles.hpp"
#include "ribbonlab/operators.hpp"
#include "ribbonlab/predicates.hpp"
#include "support.hpp"

using namespace ribbonlab;
using support::graph;

TEST_CASE("deletion") {
  CHECK(are_isomorphic(delete_edges(support::kTorus, {"a", "b"}), support::kIsolated));
  CHECK(delete_edges(support::kTorus, {}) == support::kTorus);
  const RibbonGraph parallel = graph("vertex u: e.1 f.1\nvertex v: f.2 e.2\nedge e: +\nedge f: +\n");
  const RibbonGraph one = delete_edges(parallel, {"f"});
  CHECK(one.edge_count() == 1);
  CHECK(one.edge(0).name == "e");
  CHECK(are_isomorphic(one, support::kBridge));
  CHECK_THROWS_AS(delete_edges(parallel, {"zz"}), UnknownEdgeError);
}

TEST_CASE("partial Petrial") {
  CHECK(partial_petrial(support::kMobiusLoop, {"e"}) == support::kPlaneLoop);
  for (const auto& g : support::universe(3)) {
    const EdgeSet all = g.all_edges();
    CHECK(partial_petrial(partial_petrial(g, all), all) == g);
    CHECK(petrial(g) == partial_petrial(g, all));
  }
  const RibbonGraph both = partial_petrial(support::kTorus, {"a", "b"});
  CHECK(is_checkerboard_colourable(both));
}

TEST_CASE("partial duals of small graphs") {
  CHECK(partial_dual(support::kTorus, {}) == support::kTorus);

  const RibbonGraph plane = partial_dual(support::kPlaneLoop, {"e"});
  CHECK(plane.vertex_count() == 2);
  CHECK(are_isomorphic(plane, support::kBridge));

  const RibbonGraph mobius = partial_dual(support::kMobiusLoop, {"e"});
  CHECK(mobius.vertex_count() == 1);
  CHECK(are_isomorphic(mobius, support::kMobiusLoop));

  const RibbonGraph bridge = partial_dual(support::kBridge, {"e"});
  CHECK(are_isomorphic(bridge, support::kPlaneLoop));

  // Torus: one face, so the dual has one vertex; the dual is again a torus.
  const RibbonGraph dual = geometric_dual(support::kTorus);
  CHECK(dual.vertex_count() == 1);
  CHECK(euler_characteristic(dual).total == 0);
  CHECK(are_isomorphic(dual, support::kTorus));

  // Untouched vertices keep their names; edge labels survive.
  const RibbonGraph mixed = graph("vertex keep: f.1 f.2\nvertex u: e.1\nvertex v: e.2\nedge e: +\nedge f: +\n");
  const RibbonGraph pd = partial_dual(mixed, {"e"});
  CHECK(pd.find_vertex("keep"));
  CHECK(pd.edge(0).name == "e");
  CHECK(pd.edge(1).name == "f");
}

TEST_CASE("partial duality is an involution and respects face/vertex counts") {
  for (const auto& g : support::universe(3)) {
    for (const auto& a : all_edge_subsets(g)) {
      const RibbonGraph ga = partial_dual(g, a);
      REQUIRE(validate(ga).empty());
      REQUIRE(are_isomorphic(partial_dual(ga, a), g));
      // v(G^A) = f(G - A^c)
      CHECK(ga.vertex_count() == trace_boundary(delete_edges(g, g.complement(a))).count());
    }
    CHECK(geometric_dual(g).vertex_count() == trace_boundary(g).count());
    CHECK(is_orientable(geometric_dual(g)) == is_orientable(g));
  }
}

TEST_CASE("contraction matches the splice construction") {
  CHECK(contract(support::kTorus, {}) == support::kTorus);
  const RibbonGraph loop_gone = contract(support::kPlaneLoop, {"e"});
  CHECK(loop_gone.edge_count() == 0);
  CHECK(loop_gone.vertex_count() == 2);

  UniverseParams p;
  p.max_edges = 3;
  p.max_isolated = 0;
  p.dedup = false;
  int checked = 0;
  for (const auto& g : enumerate_graphs(p)) {
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.is_loop(e)) continue;
      const RibbonGraph expected = oracle::splice_contract(g, e);
      REQUIRE(validate(expected).empty());
      REQUIRE(oracle::brute_isomorphic(canonical_form(contract(g, {g.edge(e).name})), canonical_form(expected)));
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("minors") {
  CHECK(minor(support::kTorus, {}, {}) == support::kTorus);
  CHECK_THROWS_AS(minor(support::kTorus, {"a"}, {"a"}), PreconditionError);
  for (const auto& g : support::universe(3)) {
    for (const auto& b : all_edge_subsets(g)) {
      const EdgeSet rest = g.complement(b);
      CHECK(are_isomorphic(minor(g, b, rest), contract(delete_edges(g, b), rest)));
      CHECK(are_isomorphic(contract(delete_edges(g, b), rest), delete_edges(contract(g, rest), b)));
    }
  }
}

TEST_CASE("twist words") {
  CHECK(parse_twist_word("e1:dt,e2:1,e3:d") ==
        TwistWord{{"e1", TwistElement::kDualTwist}, {"e2", TwistElement::kIdentity}, {"e3", TwistElement::kDual}});
  CHECK(parse_twist_word("") .empty());
  CHECK_THROWS_AS(parse_twist_word("e1:x"), ParseError);
  CHECK_THROWS_AS(parse_twist_word("e1"), ParseError);
  CHECK_THROWS_AS(parse_twist_word("e1:d,e1:t"), ParseError);
  CHECK(parse_twist_element("tdt") == TwistElement::kDualTwistDual);
  CHECK(application_order(TwistElement::kDualTwist) == "td");
  CHECK(application_order(TwistElement::kTwistDual) == "dt");

  CHECK(apply_twist_word(support::kTorus, {{"a", TwistElement::kIdentity}}) == support::kTorus);
  CHECK(apply_twist_word(support::kTorus,
                         {{"a", TwistElement::kDual}, {"b", TwistElement::kDual}}) == geometric_dual(support::kTorus));
  CHECK_THROWS_AS(apply_twist_word(support::kTorus, {{"zz", TwistElement::kDual}}), UnknownEdgeError);
}

TEST_CASE("the twist group is S3") {
  const TwistElement all[] = {TwistElement::kIdentity,  TwistElement::kDual,      TwistElement::kTwist,
                              TwistElement::kDualTwist, TwistElement::kTwistDual, TwistElement::kDualTwistDual};
  for (auto x : all) {
    CHECK(parse_twist_element(to_string(x)) == x);
    for (auto y : all)
      for (auto z : all) CHECK(compose(x, compose(y, z)) == compose(compose(x, y), z));
  }
  CHECK(compose(TwistElement::kDual, TwistElement::kTwist) == TwistElement::kDualTwist);
  CHECK(compose(TwistElement::kDualTwist, compose(TwistElement::kDualTwist, TwistElement::kDualTwist)) ==
        TwistElement::kIdentity);

  // compose agrees with applying the steps.
  for (const auto& g : support::universe(2)) {
    for (const auto& e : g.all_edges()) {
      for (auto x : all) {
        for (auto y : all) {
          const RibbonGraph direct = apply_twist_word(apply_twist_word(g, {{e, y}}), {{e, x}});
          CHECK(are_isomorphic(direct, apply_twist_word(g, {{e, compose(x, y)}})));
        }
      }
      CHECK(are_isomorphic(apply_steps(g, {e}, "tdtdtd"), g));
      CHECK(apply_steps(g, {e}, "tt") == g);
    }
  }
}
