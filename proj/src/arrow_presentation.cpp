#include "ribbonlab/arrow_presentation.hpp"

namespace ribbonlab {

ArrowPresentation to_arrow_presentation(const RibbonGraph& g) {
  require_valid(g);
  ArrowPresentation out;
  for (const auto& e : g.edges()) out.edge_names.push_back(e.name);
  for (const auto& v : g.vertices()) {
    ArrowCircle circle{v.name, {}};
    for (const auto& h : v.rotation) {
      const bool forward = h.end == 1 || g.edge(h.edge).sign == Sign::Plus;
      circle.arrows.push_back({h.edge, h.end, forward});
    }
    out.circles.push_back(std::move(circle));
  }
  return out;
}

RibbonGraph from_arrow_presentation(const ArrowPresentation& a) {
  const int m = static_cast<int>(a.edge_names.size());
  std::vector<int> count(m, 0);
  std::vector<int> end_mask(m, 0);
  std::vector<int> forward_count(m, 0);
  for (const auto& c : a.circles) {
    for (const auto& arrow : c.arrows) {
      if (arrow.edge < 0 || arrow.edge >= m)
        throw MalformedPresentationError("arrow with unknown label index " + std::to_string(arrow.edge));
      if (arrow.end != 1 && arrow.end != 2)
        throw MalformedPresentationError("arrow '" + a.edge_names[arrow.edge] + "' has bad end tag");
      ++count[arrow.edge];
      end_mask[arrow.edge] |= arrow.end;
      forward_count[arrow.edge] += arrow.forward ? 1 : 0;
    }
  }
  std::vector<Edge> edges;
  for (int e = 0; e < m; ++e) {
    if (count[e] != 2 || end_mask[e] != 3)
      throw MalformedPresentationError("label '" + a.edge_names[e] + "' appears on " +
                                       std::to_string(count[e]) + " arrows, expected 2");
    edges.push_back({a.edge_names[e], forward_count[e] == 1 ? Sign::Minus : Sign::Plus});
  }
  std::vector<Vertex> vertices;
  for (const auto& c : a.circles) {
    Vertex v{c.name, {}};
    for (const auto& arrow : c.arrows) v.rotation.push_back({arrow.edge, arrow.end});
    vertices.push_back(std::move(v));
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

}  // namespace ribbonlab
