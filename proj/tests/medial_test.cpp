#include <doctest.h>

#include <set>

#include "ribbonlab/medial.hpp"
#include "ribbonlab/operators.hpp"
#include "support.hpp"

using namespace ribbonlab;

TEST_CASE("ports") {
  CHECK(port_index(1, Side::L) == 0);
  CHECK(port_index(1, Side::R) == 1);
  CHECK(port_index(2, Side::R) == 2);
  CHECK(port_index(2, Side::L) == 3);
  for (int p = 0; p < 4; ++p) {
    CHECK(port_index(port_end(p), port_side(p)) == p);
    CHECK(opposite_port(opposite_port(p)) == p);
  }
}

TEST_CASE("medial graph shape") {
  const MedialGraph loop = build_medial(support::kPlaneLoop);
  CHECK(loop.vertex_count() == 1);
  CHECK(loop.edges().size() == 2);
  CHECK(loop.free_loops().empty());

  const MedialGraph iso = build_medial(support::kIsolated);
  CHECK(iso.vertex_count() == 0);
  CHECK(iso.edges().empty());
  CHECK(iso.free_loops() == std::vector<int>{0});

  const MedialGraph torus = build_medial(support::kTorus);
  CHECK(torus.vertex_count() == 2);
  CHECK(torus.edges().size() == 4);

  CHECK_THROWS_AS(build_medial(support::kMobiusLoop), PreconditionError);

  // Each port is used by exactly one medial edge; the export is 4-regular.
  for (const auto& g : support::universe(3)) {
    if (!is_orientable(g)) continue;
    const MedialGraph m = build_medial(g);
    std::set<std::pair<int, int>> ports;
    for (const auto& e : m.edges()) {
      CHECK(ports.insert({e.a.vertex, e.a.port}).second);
      CHECK(ports.insert({e.b.vertex, e.b.port}).second);
    }
    CHECK(ports.size() == 4u * m.vertex_count());
    const RibbonGraph exported = m.to_ribbon_graph();
    CHECK(validate(exported).empty());
    for (int v = 0; v < exported.vertex_count(); ++v) CHECK(exported.degree(v) == 4);
  }
}

TEST_CASE("straight-ahead walks are all-crossing") {
  CHECK(is_all_crossing(build_medial(support::kPlaneLoop),
                        straight_ahead_direction(build_medial(support::kPlaneLoop))));
  const MedialGraph torus = build_medial(support::kTorus);
  CHECK(is_all_crossing(torus, straight_ahead_direction(torus)));

  for (const auto& g : support::universe(3)) {
    if (!is_orientable(g)) continue;
    const MedialGraph m = build_medial(g);
    for (bool reverse : {false, true}) {
      const auto dir = straight_ahead_direction(m, reverse);
      REQUIRE(is_all_crossing(m, dir));
      for (int v = 0; v < m.vertex_count(); ++v) {
        int heads = 0;
        for (int p = 0; p < 4; ++p) heads += is_head(m, dir, {v, p});
        CHECK(heads == 2);
        // Straight ahead: opposite ports have opposite roles.
        CHECK(is_head(m, dir, {v, 0}) != is_head(m, dir, {v, 2}));
      }
    }
  }
}

TEST_CASE("c/d classification") {
  const MedialGraph m = build_medial(support::kTorus);
  const auto dir = straight_ahead_direction(m);
  const auto cls = classify_cd(m, dir);
  for (int v = 0; v < m.vertex_count(); ++v) {
    // heads on both end-1 ports make the across-ends smoothing consistent
    const bool end_pair = is_head(m, dir, {v, 0}) == is_head(m, dir, {v, 1});
    CHECK((cls.type[v] == CrossingType::kD) == !end_pair);
  }

  AllCrossingDirection broken = dir;
  broken.a_to_b[0] = !broken.a_to_b[0];
  CHECK_THROWS_AS(classify_cd(m, broken), PreconditionError);
}

TEST_CASE("smoothing") {
  for (const auto& g : support::universe(3)) {
    if (!is_orientable(g)) continue;
    const MedialGraph m = build_medial(g);
    const auto dir = straight_ahead_direction(m);
    const auto cls = classify_cd(m, dir);
    const auto curves = smooth(m, dir, cls);

    // Curves partition the medial edges (free loops carry none).
    std::vector<int> seen(m.edges().size(), 0);
    for (const auto& c : curves)
      for (int e : c.medial_edges) ++seen[e];
    for (int s : seen) CHECK(s == 1);

    // Each c-edge: its two edge line segments with opposite signs; each
    // d-edge: its two common line segments with opposite signs.
    std::vector<int> balance(m.vertex_count(), 0), visits(m.vertex_count(), 0);
    for (const auto& c : curves)
      for (const auto& s : c.segments) {
        CHECK(s.kind == cls.type[s.edge]);
        balance[s.edge] += s.positive ? 1 : -1;
        ++visits[s.edge];
      }
    for (int v = 0; v < m.vertex_count(); ++v) {
      CHECK(visits[v] == 2);
      CHECK(balance[v] == 0);
    }

    // One curve per boundary component of host - D.
    const RibbonGraph host_minus_d = delete_edges(m.host(), cls.d_edges(m.host()));
    CHECK(static_cast<int>(curves.size()) == trace_boundary(host_minus_d).count());
  }
}

TEST_CASE("DOT export") {
  const MedialGraph m = build_medial(support::kTorus);
  const auto dir = straight_ahead_direction(m);
  const std::string dot = medial_to_dot(m, dir, classify_cd(m, dir));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);
}
