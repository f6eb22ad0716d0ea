#include "ribbonlab/predicates.hpp"

#include <queue>

namespace ribbonlab {

namespace {

// Proper 2-colouring of a multigraph given as an edge list; nullopt if some
// link closes an odd cycle (self-links included).
std::optional<std::vector<Colour>> two_colour(int nodes, const std::vector<std::pair<int, int>>& links) {
  std::vector<std::vector<int>> adjacent(nodes);
  for (const auto& [a, b] : links) {
    if (a == b) return std::nullopt;
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  }
  std::vector<int> colour(nodes, -1);
  for (int root = 0; root < nodes; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int w : adjacent[u]) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Colour> out(nodes);
  for (int i = 0; i < nodes; ++i) out[i] = static_cast<Colour>(colour[i]);
  return out;
}

}  // namespace

bool is_eulerian(const RibbonGraph& g) {
  require_valid(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

bool is_bipartite(const RibbonGraph& g) {
  require_valid(g);
  std::vector<std::pair<int, int>> links;
  for (int e = 0; e < g.edge_count(); ++e) links.emplace_back(g.vertex_of({e, 1}), g.vertex_of({e, 2}));
  return two_colour(g.vertex_count(), links).has_value();
}

std::vector<int> face_degrees(const RibbonGraph& g) {
  const auto boundary = trace_boundary(g);
  std::vector<int> out;
  for (const auto& c : boundary.components) out.push_back(static_cast<int>(c.size()) / 2);
  out.insert(out.end(), boundary.free_vertices.size(), 0);
  return out;
}

bool is_even_face(const RibbonGraph& g) {
  for (int d : face_degrees(g))
    if (d % 2 != 0) return false;
  return true;
}

std::optional<FaceColouring> checkerboard_colouring(const RibbonGraph& g) {
  const auto boundary = trace_boundary(g);
  std::vector<std::pair<int, int>> links;
  for (int e = 0; e < g.edge_count(); ++e)
    links.emplace_back(boundary.component({{e, 1}, Side::L}), boundary.component({{e, 1}, Side::R}));
  auto colours = two_colour(boundary.count(), links);
  if (!colours) return std::nullopt;
  return FaceColouring{std::move(*colours)};
}

bool is_checkerboard_colourable(const RibbonGraph& g) { return checkerboard_colouring(g).has_value(); }

bool is_valid_face_colouring(const RibbonGraph& g, const FaceColouring& colouring) {
  const auto boundary = trace_boundary(g);
  if (static_cast<int>(colouring.colours.size()) != boundary.count()) return false;
  for (int e = 0; e < g.edge_count(); ++e) {
    const int a = boundary.component({{e, 1}, Side::L});
    const int b = boundary.component({{e, 1}, Side::R});
    if (colouring.colours[a] == colouring.colours[b]) return false;
  }
  return true;
}

}  // namespace ribbonlab
