#include "ribbonlab/algorithms.hpp"

#include <algorithm>
#include <queue>

#include "ribbonlab/operators.hpp"

namespace ribbonlab {

EdgeSet orienting_petrial_set(const RibbonGraph& g) {
  require_valid(g);
  const int n = g.vertex_count();
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    incident[g.vertex_of({e, 1})].push_back(e);
    if (!g.is_loop(e)) incident[g.vertex_of({e, 2})].push_back(e);
  }
  std::vector<int> bit(n, -1);
  for (int root = 0; root < n; ++root) {
    if (bit[root] >= 0) continue;
    bit[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int e : incident[u]) {
        const int a = g.vertex_of({e, 1});
        const int w = a == u ? g.vertex_of({e, 2}) : a;
        if (bit[w] < 0) {
          bit[w] = bit[u] ^ (g.edge(e).sign == Sign::Minus ? 1 : 0);
          queue.push(w);
        }
      }
    }
  }
  EdgeSet out;
  for (int e = 0; e < g.edge_count(); ++e) {
    const bool twisted = g.edge(e).sign == Sign::Minus;
    const bool flip_between = bit[g.vertex_of({e, 1})] != bit[g.vertex_of({e, 2})];
    if (twisted != flip_between) out.insert(g.edge(e).name);
  }
  return out;
}

TwistedDualCertificate checkerboard_twisted_dual(const RibbonGraph& g, bool reverse_walks) {
  const EdgeSet twisted = orienting_petrial_set(g);
  RibbonGraph host = partial_petrial(g, twisted);
  const MedialGraph medial = build_medial(host);
  const AllCrossingDirection dir = straight_ahead_direction(medial, reverse_walks);
  CDClassification cls = classify_cd(medial, dir);
  const EdgeSet dualled = cls.d_edges(host);
  RibbonGraph result = partial_dual(host, dualled);
  auto colouring = checkerboard_colouring(result);
  if (!colouring) throw InvariantFailure("twisted dual from d-edges is not checkerboard colourable");
  return {twisted, dualled, std::move(host), std::move(cls), std::move(result), std::move(*colouring)};
}

VertexColouring vertex_checkerboard_colouring(const RibbonGraph& g, Colour first) {
  if (!is_eulerian(g)) throw PreconditionError("vertex checkerboard colouring needs even degrees");
  VertexColouring out;
  out.segments.assign(4 * g.edge_count(), Colour::kRed);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.vertex(v).rotation;
    const int d = static_cast<int>(rot.size());
    auto& corners = out.corners.emplace_back();
    for (int i = 0; i < d; ++i) {
      const Colour c = i % 2 == 0 ? first : other(first);
      corners.push_back(c);
      const EdgeEnd here = rot[i];
      const EdgeEnd next = rot[(i + 1) % d];
      out.segments[HalfEdgeSegment{here, next_side(here)}.index()] = c;
      out.segments[HalfEdgeSegment{next, prev_side(next)}.index()] = c;
    }
  }
  return out;
}

EdgeSet inconsistent_edges(const RibbonGraph& g, const VertexColouring& colouring) {
  require_valid(g);
  if (colouring.segments.size() != 4u * g.edge_count())
    throw PreconditionError("vertex colouring does not match the graph");
  EdgeSet out;
  for (int e = 0; e < g.edge_count(); ++e) {
    const HalfEdgeSegment s{{e, 1}, Side::L};
    if (colouring.segments[s.index()] != colouring.segments[edge_partner(g, s).index()])
      out.insert(g.edge(e).name);
  }
  return out;
}

PartialPetrialCertificate checkerboard_partial_petrial(const RibbonGraph& g, Colour first) {
  VertexColouring vc = vertex_checkerboard_colouring(g, first);
  EdgeSet twisted = inconsistent_edges(g, vc);
  RibbonGraph result = partial_petrial(g, twisted);
  auto colouring = checkerboard_colouring(result);
  if (!colouring) throw InvariantFailure("partial Petrial of inconsistent edges is not checkerboard colourable");

  // Rotations are unchanged, so the vertex colouring still applies, and each
  // face must be monochromatic under it.
  const auto boundary = trace_boundary(result);
  FaceColouring inherited;
  for (const auto& face : boundary.components) {
    const Colour c = vc.segments[face.front().index()];
    for (const auto& s : face)
      if (vc.segments[s.index()] != c) throw InvariantFailure("face boundary is not monochromatic");
    inherited.colours.push_back(c);
  }
  inherited.colours.insert(inherited.colours.end(), boundary.free_vertices.size(), Colour::kRed);
  if (!is_valid_face_colouring(result, inherited))
    throw InvariantFailure("inherited face colouring is not proper");
  return {std::move(twisted), std::move(vc), std::move(result), std::move(*colouring)};
}

bool boundary_orientation_criterion(const RibbonGraph& g, const EdgeSet& edges) {
  const RibbonGraph h = normalize_orientation(g);
  const auto removed = h.edge_mask(edges);
  const int segments = 4 * h.edge_count();

  // Boundary of h - A traced on h's own segments: a removed edge is skirted
  // along its common line segment instead of crossed. Each step across a
  // line segment records whether the walk agrees with the orientation.
  std::vector<int> component(segments, -1);
  std::vector<int> raw_sign;  // per component, +1 / -1
  for (int start = 0; start < segments; ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(raw_sign.size());
    int sign = 0;
    HalfEdgeSegment s = HalfEdgeSegment::from_index(start);
    do {
      HalfEdgeSegment t;
      bool positive;
      if (removed[s.end.edge]) {
        t = {s.end, flipped(s.side)};
        positive = s.end.end == 1 ? s.side == Side::R : s.side == Side::L;
      } else {
        t = edge_partner(h, s);
        positive = s.side == Side::L ? s.end.end == 2 : s.end.end == 1;
      }
      const int step = positive ? 1 : -1;
      if (sign == 0) sign = step;
      else if (sign != step) throw InvariantFailure("boundary walk changes orientation sign");
      component[s.index()] = component[t.index()] = id;
      s = corner_partner(h, t);
    } while (s.index() != start);
    raw_sign.push_back(sign);
  }

  // For every edge, the pair of segments whose signs must differ.
  std::vector<std::pair<int, int>> constraints;
  for (int e = 0; e < h.edge_count(); ++e) {
    const HalfEdgeSegment first{{e, 1}, Side::L};
    const HalfEdgeSegment second = removed[e] ? HalfEdgeSegment{{e, 2}, Side::L} : HalfEdgeSegment{{e, 1}, Side::R};
    constraints.emplace_back(component[first.index()], component[second.index()]);
  }

  const int f = static_cast<int>(raw_sign.size());
  if (f > 24) throw TooLargeError("too many boundary components for exhaustive orientation search");
  for (std::uint32_t mask = 0; mask < (1u << f); ++mask) {
    const auto oriented = [&](int c) { return ((mask >> c) & 1u) ? -raw_sign[c] : raw_sign[c]; };
    const bool ok = std::all_of(constraints.begin(), constraints.end(),
                                [&](const auto& p) { return oriented(p.first) != oriented(p.second); });
    if (ok) return true;
  }
  return false;
}

}  // namespace ribbonlab
