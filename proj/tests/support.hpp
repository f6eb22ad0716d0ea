#pragma once

#include <string>

#include "ribbonlab/text_format.hpp"
#include "ribbonlab/workbench.hpp"

namespace support {

inline ribbonlab::RibbonGraph graph(std::string_view text) { return ribbonlab::parse_graph(text); }

inline ribbonlab::RibbonGraph fixture(const std::string& name) {
  return ribbonlab::read_graph_file(std::string(RIBBONLAB_FIXTURES) + "/" + name);
}

inline const ribbonlab::RibbonGraph kPlaneLoop = graph("vertex v: e.1 e.2\nedge e: +\n");
inline const ribbonlab::RibbonGraph kMobiusLoop = graph("vertex v: e.1 e.2\nedge e: -\n");
inline const ribbonlab::RibbonGraph kBridge = graph("vertex u: e.1\nvertex v: e.2\nedge e: +\n");
inline const ribbonlab::RibbonGraph kTorus =
    graph("vertex v: a.1 b.1 a.2 b.2\nedge a: +\nedge b: +\n");
inline const ribbonlab::RibbonGraph kIsolated = graph("vertex v:\n");

/// Deduped universe without isolated vertices beyond the edgeless one.
inline std::vector<ribbonlab::RibbonGraph> universe(int max_edges, int max_isolated = 1) {
  ribbonlab::UniverseParams p;
  p.max_edges = max_edges;
  p.max_isolated = max_isolated;
  return ribbonlab::enumerate_graphs(p);
}

}  // namespace support
