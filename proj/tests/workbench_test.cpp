#include <doctest.h>

#include <json.hpp>
#include <map>
#include <set>

#include "ribbonlab/operators.hpp"
#include "ribbonlab/predicates.hpp"
#include "support.hpp"

using namespace ribbonlab;

namespace {

std::map<int, std::size_t> counts_by_edges(const std::vector<RibbonGraph>& u) {
  std::map<int, std::size_t> out;
  for (const auto& g : u) ++out[g.edge_count()];
  return out;
}

}  // namespace

TEST_CASE("golden enumeration counts") {
  UniverseParams p;
  p.max_edges = 4;
  p.max_isolated = 0;
  CHECK(counts_by_edges(enumerate_graphs(p)) == std::map<int, std::size_t>{{0, 1}, {1, 3}, {2, 17}, {3, 106}, {4, 850}});
  CHECK(support::universe(2).size() == 41);
  CHECK(support::universe(3).size() == 253);

  p.max_edges = 0;
  CHECK(enumerate_graphs(p).size() == 1);

  // One edge: the two loops on one vertex, and one edge on two vertices
  // whatever its sign.
  p.min_edges = p.max_edges = 1;
  p.max_vertices = 1;
  CHECK(enumerate_graphs(p).size() == 2);
  p.max_vertices = 0;
  p.connected_only = true;
  std::size_t two_vertex = 0;
  for (const auto& g : enumerate_graphs(p)) two_vertex += g.vertex_count() == 2;
  CHECK(two_vertex == 1);
}

TEST_CASE("dedup agrees with the labelled enumeration") {
  for (int k = 0; k <= 3; ++k) {
    UniverseParams p;
    p.min_edges = p.max_edges = k;
    p.max_isolated = 1;
    std::set<std::vector<int>> deduped;
    for (const auto& g : enumerate_graphs(p)) {
      REQUIRE(validate(g).empty());
      CHECK(deduped.insert(canonical_key(g)).second);
      CHECK(canonical_form(g) == g);
    }
    p.dedup = false;
    std::set<std::vector<int>> raw;
    for (const auto& g : enumerate_graphs(p)) raw.insert(canonical_key(g));
    CHECK(raw == deduped);
  }
}

TEST_CASE("universe filters and caps") {
  UniverseParams p;
  p.max_edges = 3;
  p.connected_only = true;
  p.max_vertices = 2;
  for (const auto& g : enumerate_graphs(p)) {
    CHECK(connected_components(g).size() == 1);
    CHECK(g.vertex_count() <= 2);
  }
  p = {};
  p.max_edges = kMaxEnumeratedEdges + 1;
  CHECK_THROWS_AS(enumerate_graphs(p), TooLargeError);
  p.max_edges = kMaxLabelledEdges + 1;
  p.dedup = false;
  CHECK_THROWS_AS(enumerate_graphs(p), TooLargeError);
  p.max_edges = -1;
  CHECK_THROWS_AS(enumerate_graphs(p), PreconditionError);
}

TEST_CASE("enumeration is deterministic") {
  const auto a = support::universe(3);
  const auto b = support::universe(3);
  CHECK(a == b);
}

TEST_CASE("edge subsets") {
  const auto subsets = all_edge_subsets(support::kTorus);
  CHECK(subsets == std::vector<EdgeSet>{{}, {"a"}, {"b"}, {"a", "b"}});
}

TEST_CASE("property registry") {
  CHECK(property_registry().size() >= 16);
  CHECK_THROWS_AS(find_property("no-such-property"), Error);
  CHECK_THROWS_AS(run_property_suite(UniverseParams{}, "no-such-property"), Error);
  std::set<std::string> names;
  for (const auto& p : property_registry()) CHECK(names.insert(p.name).second);
}

TEST_CASE("every property holds on the two-edge universe") {
  UniverseParams p;
  p.max_edges = 2;
  const auto universe = enumerate_graphs(p);
  for (const auto& prop : property_registry()) {
    const auto report = run_property_suite(universe, p, prop);
    INFO(report.to_text());
    CHECK(report.passed());
    CHECK(report.checked > 0);
  }
}

TEST_CASE("a broken property is reported with witnesses") {
  UniverseParams p;
  p.max_edges = 2;
  const auto universe = enumerate_graphs(p);
  const NamedProperty liar{"liar", "every graph is bipartite",
                           [](const RibbonGraph& g) { return is_bipartite(g) ? "" : std::string("has odd cycle"); },
                           {}};
  const auto report = run_property_suite(universe, p, liar);
  CHECK_FALSE(report.passed());
  REQUIRE_FALSE(report.failures.empty());
  CHECK(report.failures.front().detail == "has odd cycle");
  CHECK_FALSE(is_bipartite(parse_graph(report.failures.front().graph)));
  CHECK(report.to_text().rfind("FAIL", 0) == 0);
}

TEST_CASE("reports do not depend on the worker count") {
  UniverseParams p;
  p.max_edges = 3;
  const auto universe = enumerate_graphs(p);
  const NamedProperty odd{"odd", "fails on odd edge counts",
                          [](const RibbonGraph& g) { return g.edge_count() % 2 ? "odd" : ""; },
                          {}};
  for (const auto* prop : {&find_property("theorem1-endtoend"), &odd}) {
    const auto one = run_property_suite(universe, p, *prop, 1);
    for (int workers : {2, 3, 8}) {
      const auto many = run_property_suite(universe, p, *prop, workers);
      CHECK(many.checked == one.checked);
      REQUIRE(many.failures.size() == one.failures.size());
      for (std::size_t i = 0; i < one.failures.size(); ++i) {
        CHECK(many.failures[i].index == one.failures[i].index);
        CHECK(many.failures[i].graph == one.failures[i].graph);
      }
    }
  }
}

TEST_CASE("JSON report schema") {
  UniverseParams p;
  p.max_edges = 1;
  const auto report = run_property_suite(p, "face-counts");
  const auto j = nlohmann::json::parse(report.to_json());
  CHECK(j["property"] == "face-counts");
  CHECK(j["params"]["max_edges"] == 1);
  CHECK(j["checked"] == report.checked);
  CHECK(j["failures"].is_array());
  CHECK(j.contains("elapsed-ms"));
}

TEST_CASE("converse counterexample") {
  CHECK_FALSE(search_converse_counterexample(support::universe(1)));

  const auto found = search_converse_counterexample(support::universe(4));
  REQUIRE(found);
  CHECK(verify_converse_witness(*found));
  CHECK(found->graph.edge_count() == 3);

  const ConverseWitness stored{support::fixture("converse_witness.rg"), {"e2"}};
  CHECK(verify_converse_witness(stored));
  CHECK(stored.graph == found->graph);
  CHECK(stored.subset == found->subset);

  CHECK_FALSE(verify_converse_witness({support::kTorus, {}}));
}
