#include "ribbonlab/medial.hpp"

#include <sstream>

namespace ribbonlab {

int port_index(int end, Side side) {
  if (end == 1) return side == Side::L ? 0 : 1;
  return side == Side::R ? 2 : 3;
}

int port_end(int port) { return port < 2 ? 1 : 2; }

Side port_side(int port) { return (port == 0 || port == 3) ? Side::L : Side::R; }

namespace {

PortRef port_of(HalfEdgeSegment s) { return {s.end.edge, port_index(s.end.end, s.side)}; }

}  // namespace

MedialGraph::MedialGraph(RibbonGraph normalized_host) : host_(std::move(normalized_host)) {
  for (const auto& e : host_.edges())
    if (e.sign != Sign::Plus) throw PreconditionError("medial graph host must be normalized (all signs +)");
  edge_at_.assign(4 * host_.edge_count(), -1);
  for (int v = 0; v < host_.vertex_count(); ++v) {
    const auto& rot = host_.vertex(v).rotation;
    const int d = static_cast<int>(rot.size());
    if (d == 0) free_loops_.push_back(v);
    for (int i = 0; i < d; ++i) {
      const EdgeEnd here = rot[i];
      const EdgeEnd next = rot[(i + 1) % d];
      MedialEdge me{port_of({here, next_side(here)}), port_of({next, prev_side(next)}), v, i};
      const int id = static_cast<int>(edges_.size());
      edge_at_[4 * me.a.vertex + me.a.port] = id;
      edge_at_[4 * me.b.vertex + me.b.port] = id;
      edges_.push_back(me);
    }
  }
}

RibbonGraph MedialGraph::to_ribbon_graph() const {
  std::vector<Vertex> vertices;
  for (int x = 0; x < vertex_count(); ++x) {
    Vertex v{host_.edge(x).name, {}};
    for (int p = 0; p < 4; ++p) {
      const int id = edge_at({x, p});
      const auto& me = edges_[id];
      v.rotation.push_back({id, me.a == PortRef{x, p} ? 1 : 2});
    }
    vertices.push_back(std::move(v));
  }
  std::vector<Edge> edges;
  for (const auto& me : edges_)
    edges.push_back({"c" + host_.vertex(me.host_vertex).name + "_" + std::to_string(me.corner), Sign::Plus});
  return RibbonGraph(std::move(vertices), std::move(edges));
}

MedialGraph build_medial(const RibbonGraph& host) { return MedialGraph(normalize_orientation(host)); }

bool is_head(const MedialGraph& m, const AllCrossingDirection& dir, PortRef p) {
  const int id = m.edge_at(p);
  const auto& me = m.edges()[id];
  return dir.a_to_b.at(id) ? me.b == p : me.a == p;
}

bool is_all_crossing(const MedialGraph& m, const AllCrossingDirection& dir) {
  if (dir.a_to_b.size() != m.edges().size()) return false;
  for (int x = 0; x < m.vertex_count(); ++x) {
    // Two heads that are cyclically adjacent <=> opposite ports always differ.
    for (int p = 0; p < 2; ++p)
      if (is_head(m, dir, {x, p}) == is_head(m, dir, {x, opposite_port(p)})) return false;
  }
  return true;
}

AllCrossingDirection straight_ahead_direction(const MedialGraph& m, bool reverse_walks) {
  const auto& edges = m.edges();
  AllCrossingDirection dir;
  dir.a_to_b.assign(edges.size(), true);
  std::vector<bool> done(edges.size(), false);
  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (done[start]) continue;
    int id = static_cast<int>(start);
    PortRef from = edges[start].a;
    do {
      if (done[id]) throw InvariantFailure("straight-ahead walk revisits a medial edge");
      done[id] = true;
      const auto& me = edges[id];
      const bool forward = me.a == from;
      dir.a_to_b[id] = forward != reverse_walks;
      const PortRef to = forward ? me.b : me.a;
      from = {to.vertex, opposite_port(to.port)};
      id = m.edge_at(from);
    } while (id != static_cast<int>(start));
    if (!(from == edges[start].a)) throw InvariantFailure("straight-ahead walk closes inconsistently");
  }
  return dir;
}

EdgeSet CDClassification::d_edges(const RibbonGraph& host) const {
  EdgeSet out;
  for (int e = 0; e < static_cast<int>(type.size()); ++e)
    if (type[e] == CrossingType::kD) out.insert(host.edge(e).name);
  return out;
}

CDClassification classify_cd(const MedialGraph& m, const AllCrossingDirection& dir) {
  if (!is_all_crossing(m, dir)) throw PreconditionError("direction is not all-crossing");
  CDClassification out;
  for (int x = 0; x < m.vertex_count(); ++x) {
    const bool end1_split = is_head(m, dir, {x, 0}) != is_head(m, dir, {x, 1});
    out.type.push_back(end1_split ? CrossingType::kD : CrossingType::kC);
  }
  return out;
}

namespace {

int smoothing_partner(CrossingType t, int port) {
  static constexpr int kAlongSides[4] = {3, 2, 1, 0};
  static constexpr int kAcrossEnds[4] = {1, 0, 3, 2};
  return t == CrossingType::kC ? kAlongSides[port] : kAcrossEnds[port];
}

// Host orientation: vertex boundaries run counterclockwise, i.e. from side
// R to side L across end 1 and from L to R across end 2; edge line segments
// run from end 2 to end 1 on side L and from end 1 to end 2 on side R.
SignedSegment crossing_segment(int edge, CrossingType t, int arrive) {
  SignedSegment s{t, edge, 0, false};
  if (t == CrossingType::kC) {
    s.which = static_cast<int>(port_side(arrive));
    s.positive = port_side(arrive) == Side::L ? port_end(arrive) == 2 : port_end(arrive) == 1;
  } else {
    s.which = port_end(arrive);
    s.positive = port_end(arrive) == 1 ? port_side(arrive) == Side::R : port_side(arrive) == Side::L;
  }
  return s;
}

}  // namespace

std::vector<SmoothedCurve> smooth(const MedialGraph& m, const AllCrossingDirection& dir,
                                  const CDClassification& cls) {
  const auto& edges = m.edges();
  std::vector<SmoothedCurve> out;
  std::vector<bool> done(edges.size(), false);
  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (done[start]) continue;
    SmoothedCurve curve;
    int id = static_cast<int>(start);
    do {
      done[id] = true;
      curve.medial_edges.push_back(id);
      const auto& me = edges[id];
      const PortRef head = dir.a_to_b[id] ? me.b : me.a;
      const CrossingType t = cls.type.at(head.vertex);
      const PortRef leave{head.vertex, smoothing_partner(t, head.port)};
      if (is_head(m, dir, leave)) throw InvariantFailure("smoothed strand is not direction-consistent");
      curve.segments.push_back(crossing_segment(head.vertex, t, head.port));
      id = m.edge_at(leave);
      if (done[id] && id != static_cast<int>(start))
        throw InvariantFailure("smoothed curves overlap");
    } while (id != static_cast<int>(start));
    out.push_back(std::move(curve));
  }
  for (int v : m.free_loops()) {
    SmoothedCurve loop;
    loop.free_loop_vertex = v;
    out.push_back(std::move(loop));
  }
  return out;
}

std::string medial_to_dot(const MedialGraph& m, const AllCrossingDirection& dir,
                          const CDClassification& cls) {
  static constexpr const char* kPortNames[4] = {"1L", "1R", "2R", "2L"};
  std::ostringstream out;
  out << "digraph medial {\n";
  for (int x = 0; x < m.vertex_count(); ++x) {
    const bool d = cls.type.at(x) == CrossingType::kD;
    out << "  m" << x << " [label=\"" << m.host().edge(x).name << " (" << (d ? 'd' : 'c') << ")\"";
    if (d) out << ", style=filled, fillcolor=lightgrey";
    out << "];\n";
  }
  for (std::size_t id = 0; id < m.edges().size(); ++id) {
    const auto& me = m.edges()[id];
    const PortRef tail = dir.a_to_b[id] ? me.a : me.b;
    const PortRef head = dir.a_to_b[id] ? me.b : me.a;
    out << "  m" << tail.vertex << " -> m" << head.vertex << " [taillabel=\"" << kPortNames[tail.port]
        << "\", headlabel=\"" << kPortNames[head.port] << "\", label=\""
        << m.host().vertex(me.host_vertex).name << ":" << me.corner << "\"];\n";
  }
  for (int v : m.free_loops())
    out << "  free" << v << " [shape=circle, label=\"free loop " << m.host().vertex(v).name << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace ribbonlab
