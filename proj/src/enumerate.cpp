#include <algorithm>
#include <map>
#include <numeric>

#include "ribbonlab/workbench.hpp"

namespace ribbonlab {

namespace {

RibbonGraph insert_end(const RibbonGraph& g, EdgeEnd h, int vertex, int position) {
  std::vector<Vertex> vertices = g.vertices();
  if (vertex == static_cast<int>(vertices.size()))
    vertices.push_back({"v" + std::to_string(vertices.size()), {h}});
  else
    vertices[vertex].rotation.insert(vertices[vertex].rotation.begin() + position, h);
  return RibbonGraph(std::move(vertices), g.edges());
}

// All placements of one end: every cyclic slot of every vertex, or a new vertex.
std::vector<RibbonGraph> placements(const RibbonGraph& g, EdgeEnd h) {
  std::vector<RibbonGraph> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int slots = std::max(1, g.degree(v));
    for (int p = 0; p < slots; ++p) out.push_back(insert_end(g, h, v, p));
  }
  out.push_back(insert_end(g, h, g.vertex_count(), 0));
  return out;
}

// Isomorphism classes without isolated vertices, by edge count.
std::vector<std::vector<RibbonGraph>> classes_up_to(int max_edges) {
  std::vector<std::vector<RibbonGraph>> out(1, std::vector<RibbonGraph>{RibbonGraph{}});
  for (int k = 1; k <= max_edges; ++k) {
    std::map<std::vector<int>, RibbonGraph> found;
    for (const auto& base : out[k - 1]) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        std::vector<Edge> edges = base.edges();
        edges.push_back({"e" + std::to_string(k - 1), s});
        const RibbonGraph grown(base.vertices(), std::move(edges));
        for (const auto& one : placements(grown, {k - 1, 1})) {
          for (const auto& two : placements(one, {k - 1, 2})) {
            auto key = canonical_key(two);
            if (!found.count(key)) found.emplace(std::move(key), canonical_form(two));
          }
        }
      }
    }
    auto& level = out.emplace_back();
    for (auto& [key, g] : found) level.push_back(std::move(g));
  }
  return out;
}

RibbonGraph with_isolated(const RibbonGraph& g, int count) {
  std::vector<Vertex> vertices = g.vertices();
  for (int i = 0; i < count; ++i) vertices.push_back({"v" + std::to_string(vertices.size()), {}});
  return RibbonGraph(std::move(vertices), g.edges());
}

bool keep(const RibbonGraph& g, const UniverseParams& params) {
  if (params.max_vertices > 0 && g.vertex_count() > params.max_vertices) return false;
  if (params.connected_only && connected_components(g).size() != 1) return false;
  return true;
}

// Labelled rotation systems: the cycles of a permutation of the 2k edge
// ends are the vertex rotations, each started at its smallest end.
std::vector<RibbonGraph> labelled_with_edges(int k) {
  std::vector<RibbonGraph> out;
  std::vector<int> perm(2 * k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> base_edges;
  for (int e = 0; e < k; ++e) base_edges.push_back({"e" + std::to_string(e), Sign::Plus});
  do {
    std::vector<Vertex> vertices;
    std::vector<bool> seen(2 * k, false);
    for (int d = 0; d < 2 * k; ++d) {
      if (seen[d]) continue;
      Vertex v{"v" + std::to_string(vertices.size()), {}};
      for (int x = d; !seen[x]; x = perm[x]) {
        seen[x] = true;
        v.rotation.push_back(EdgeEnd::from_dart(x));
      }
      vertices.push_back(std::move(v));
    }
    for (std::uint32_t signs = 0; signs < (1u << k); ++signs) {
      std::vector<Edge> edges = base_edges;
      for (int e = 0; e < k; ++e)
        if ((signs >> e) & 1u) edges[e].sign = Sign::Minus;
      out.emplace_back(vertices, std::move(edges));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<RibbonGraph> enumerate_graphs(const UniverseParams& params) {
  if (params.max_edges < 0 || params.min_edges < 0 || params.max_isolated < 0)
    throw PreconditionError("universe bounds must be non-negative");
  if (params.max_edges > kMaxEnumeratedEdges)
    throw TooLargeError("enumeration is capped at " + std::to_string(kMaxEnumeratedEdges) + " edges");
  if (!params.dedup && params.max_edges > kMaxLabelledEdges)
    throw TooLargeError("labelled enumeration is capped at " + std::to_string(kMaxLabelledEdges) + " edges");

  std::vector<RibbonGraph> out;
  const auto add = [&](const RibbonGraph& g, int edges) {
    const int first = edges == 0 ? 1 : 0;
    const int last = std::max(first, params.max_isolated);
    for (int iso = first; iso <= last; ++iso) {
      RibbonGraph h = with_isolated(g, iso);
      if (params.dedup) h = canonical_form(h);
      if (keep(h, params)) out.push_back(std::move(h));
    }
  };

  if (params.dedup) {
    const auto classes = classes_up_to(params.max_edges);
    for (int k = params.min_edges; k <= params.max_edges; ++k)
      for (const auto& g : classes[k]) add(g, k);
  } else {
    for (int k = params.min_edges; k <= params.max_edges; ++k) {
      if (k == 0) add(RibbonGraph{}, 0);
      else
        for (const auto& g : labelled_with_edges(k)) add(g, k);
    }
  }
  return out;
}

std::vector<EdgeSet> all_edge_subsets(const RibbonGraph& g) {
  std::vector<EdgeSet> out;
  const int m = g.edge_count();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    EdgeSet s;
    for (int e = 0; e < m; ++e)
      if ((mask >> e) & 1u) s.insert(g.edge(e).name);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace ribbonlab
