#include <doctest.h>

#include "ribbonlab/operators.hpp"
#include "ribbonlab/predicates.hpp"
#include "support.hpp"

using namespace ribbonlab;
using support::graph;

TEST_CASE("Eulerian") {
  CHECK(is_eulerian(support::kIsolated));
  CHECK(is_eulerian(support::kPlaneLoop));
  CHECK_FALSE(is_eulerian(support::kBridge));
  CHECK(is_eulerian(support::kTorus));
}

TEST_CASE("bipartite") {
  CHECK(is_bipartite(support::kBridge));
  CHECK_FALSE(is_bipartite(support::kPlaneLoop));
  CHECK(is_bipartite(graph("vertex u: e.1 f.1\nvertex v: f.2 e.2\nedge e: +\nedge f: -\n")));
  CHECK_FALSE(is_bipartite(graph("vertex a: x.1 z.2\nvertex b: x.2 y.1\nvertex c: y.2 z.1\n"
                                 "edge x: +\nedge y: +\nedge z: +\n")));
}

TEST_CASE("face degrees and even faces") {
  CHECK(face_degrees(support::kPlaneLoop) == std::vector<int>{1, 1});
  CHECK(face_degrees(support::kMobiusLoop) == std::vector<int>{2});
  CHECK(face_degrees(support::kTorus) == std::vector<int>{4});
  CHECK(face_degrees(support::kIsolated) == std::vector<int>{0});
  CHECK(is_even_face(support::kMobiusLoop));
  CHECK_FALSE(is_even_face(support::kPlaneLoop));
  CHECK(is_even_face(support::kTorus));
}

TEST_CASE("checkerboard colourings") {
  const auto plane = checkerboard_colouring(support::kPlaneLoop);
  REQUIRE(plane);
  CHECK(plane->colours == std::vector<Colour>{Colour::kRed, Colour::kBlue});
  CHECK_FALSE(checkerboard_colouring(support::kMobiusLoop));
  CHECK_FALSE(is_checkerboard_colourable(support::kTorus));
  CHECK(is_checkerboard_colourable(partial_petrial(support::kTorus, {"a", "b"})));
  CHECK(is_checkerboard_colourable(support::kIsolated));

  CHECK_FALSE(is_valid_face_colouring(support::kPlaneLoop, FaceColouring{{Colour::kRed, Colour::kRed}}));
  CHECK_FALSE(is_valid_face_colouring(support::kPlaneLoop, FaceColouring{{Colour::kRed}}));

  for (const auto& g : support::universe(3)) {
    const auto c = checkerboard_colouring(g);
    if (!c) continue;
    CHECK(is_valid_face_colouring(g, *c));
    CHECK(c->colours.front() == Colour::kRed);
    CHECK(is_eulerian(g));
  }
}

TEST_CASE("duality swaps the predicates") {
  for (const auto& g : support::universe(3)) {
    const RibbonGraph d = geometric_dual(g);
    CHECK(is_checkerboard_colourable(g) == is_bipartite(d));
    CHECK(is_even_face(g) == is_eulerian(d));
  }
}
