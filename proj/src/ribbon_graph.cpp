#include "ribbonlab/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace ribbonlab {

RibbonGraph::RibbonGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  locations_.assign(2 * edges_.size(), Location{});
  for (int v = 0; v < vertex_count(); ++v) {
    const auto& rot = vertices_[v].rotation;
    for (int p = 0; p < static_cast<int>(rot.size()); ++p) {
      const EdgeEnd h = rot[p];
      if (h.edge < 0 || h.edge >= edge_count() || (h.end != 1 && h.end != 2)) continue;
      auto& loc = locations_[h.dart()];
      if (loc.vertex < 0) loc = {v, p};
    }
  }
}

EdgeEnd RibbonGraph::next_in_rotation(EdgeEnd h) const {
  const auto [v, p] = location(h);
  const auto& rot = vertices_[v].rotation;
  return rot[(p + 1) % rot.size()];
}

EdgeEnd RibbonGraph::prev_in_rotation(EdgeEnd h) const {
  const auto [v, p] = location(h);
  const auto& rot = vertices_[v].rotation;
  return rot[(p + rot.size() - 1) % rot.size()];
}

std::optional<int> RibbonGraph::find_edge(const std::string& name) const {
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[e].name == name) return e;
  return std::nullopt;
}

std::optional<int> RibbonGraph::find_vertex(const std::string& name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (vertices_[v].name == name) return v;
  return std::nullopt;
}

int RibbonGraph::edge_index(const std::string& name) const {
  if (auto e = find_edge(name)) return *e;
  throw UnknownEdgeError(name);
}

int RibbonGraph::vertex_index(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw UnknownVertexError(name);
}

std::vector<bool> RibbonGraph::edge_mask(const EdgeSet& set) const {
  std::vector<bool> mask(edges_.size(), false);
  for (const auto& name : set) mask[edge_index(name)] = true;
  return mask;
}

EdgeSet RibbonGraph::edge_set(const std::vector<bool>& mask) const {
  EdgeSet out;
  for (int e = 0; e < edge_count(); ++e)
    if (mask.at(e)) out.insert(edges_[e].name);
  return out;
}

EdgeSet RibbonGraph::all_edges() const {
  EdgeSet out;
  for (const auto& e : edges_) out.insert(e.name);
  return out;
}

EdgeSet RibbonGraph::complement(const EdgeSet& set) const {
  const auto mask = edge_mask(set);
  EdgeSet out;
  for (int e = 0; e < edge_count(); ++e)
    if (!mask[e]) out.insert(edges_[e].name);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Violation> validate(const RibbonGraph& g) {
  std::vector<Violation> out;
  const int m = g.edge_count();
  std::vector<int> seen(2 * m, 0);
  for (const auto& v : g.vertices()) {
    if (v.name.empty()) out.push_back({Violation::Kind::kEmptyName, "vertex with empty name"});
    for (const auto& h : v.rotation) {
      if (h.edge < 0 || h.edge >= m) {
        out.push_back({Violation::Kind::kBadEdgeReference,
                       "vertex '" + v.name + "' references edge index " + std::to_string(h.edge)});
        continue;
      }
      if (h.end != 1 && h.end != 2) {
        out.push_back({Violation::Kind::kBadEndIndex, "vertex '" + v.name + "' references end " +
                                                          std::to_string(h.end) + " of edge '" +
                                                          g.edge(h.edge).name + "'"});
        continue;
      }
      if (++seen[h.dart()] == 2)
        out.push_back({Violation::Kind::kDuplicateEdgeEnd,
                       "edge end " + g.edge(h.edge).name + "." + std::to_string(h.end) +
                           " appears more than once"});
    }
  }
  for (int d = 0; d < 2 * m; ++d) {
    if (seen[d] == 0) {
      const auto h = EdgeEnd::from_dart(d);
      out.push_back({Violation::Kind::kUnplacedEdgeEnd,
                     "edge end " + g.edge(h.edge).name + "." + std::to_string(h.end) +
                         " is in no rotation"});
    }
  }
  std::set<std::string> names;
  for (const auto& v : g.vertices())
    if (!v.name.empty() && !names.insert(v.name).second)
      out.push_back({Violation::Kind::kDuplicateVertexName, "duplicate vertex name '" + v.name + "'"});
  names.clear();
  for (const auto& e : g.edges()) {
    if (e.name.empty()) out.push_back({Violation::Kind::kEmptyName, "edge with empty name"});
    else if (!names.insert(e.name).second)
      out.push_back({Violation::Kind::kDuplicateEdgeName, "duplicate edge name '" + e.name + "'"});
  }
  return out;
}

void require_valid(const RibbonGraph& g) {
  const auto violations = validate(g);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid ribbon graph:";
  for (const auto& v : violations) msg << "\n  " << v.message;
  throw StructuralError(msg.str());
}

// ---------------------------------------------------------------------------

HalfEdgeSegment corner_partner(const RibbonGraph& g, HalfEdgeSegment s) {
  if (s.side == next_side(s.end)) {
    const EdgeEnd n = g.next_in_rotation(s.end);
    return {n, prev_side(n)};
  }
  const EdgeEnd p = g.prev_in_rotation(s.end);
  return {p, next_side(p)};
}

HalfEdgeSegment edge_partner(const RibbonGraph& g, HalfEdgeSegment s) {
  const Side side = g.edge(s.end.edge).sign == Sign::Plus ? s.side : flipped(s.side);
  return {s.end.other(), side};
}

BoundaryDecomposition trace_boundary(const RibbonGraph& g) {
  require_valid(g);
  BoundaryDecomposition out;
  const int segments = 4 * g.edge_count();
  out.component_of.assign(segments, -1);
  for (int start = 0; start < segments; ++start) {
    if (out.component_of[start] >= 0) continue;
    const int id = static_cast<int>(out.components.size());
    auto& comp = out.components.emplace_back();
    HalfEdgeSegment s = HalfEdgeSegment::from_index(start);
    do {
      comp.push_back(s);
      out.component_of[s.index()] = id;
      s = edge_partner(g, s);
      comp.push_back(s);
      out.component_of[s.index()] = id;
      s = corner_partner(g, s);
    } while (s.index() != start);
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) out.free_vertices.push_back(v);
  return out;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<int>> connected_components(const RibbonGraph& g) {
  require_valid(g);
  DisjointSets ds(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) ds.unite(g.vertex_of({e, 1}), g.vertex_of({e, 2}));
  std::vector<std::vector<int>> out;
  std::vector<int> slot(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int r = ds.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

EulerCharacteristic euler_characteristic(const RibbonGraph& g) {
  const auto comps = connected_components(g);
  const auto boundary = trace_boundary(g);
  std::vector<int> comp_of(g.vertex_count());
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (int v : comps[c]) comp_of[v] = c;

  EulerCharacteristic out;
  out.per_component.assign(comps.size(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) out.per_component[comp_of[v]] += 1;
  for (int e = 0; e < g.edge_count(); ++e) out.per_component[comp_of[g.vertex_of({e, 1})]] -= 1;
  for (const auto& face : boundary.components)
    out.per_component[comp_of[g.vertex_of(face.front().end)]] += 1;
  for (int v : boundary.free_vertices) out.per_component[comp_of[v]] += 1;
  out.total = std::accumulate(out.per_component.begin(), out.per_component.end(), 0);
  return out;
}

bool is_orientable(const RibbonGraph& g) {
  require_valid(g);
  // Side graph: node 2v+k is orientation copy k of vertex v. An untwisted
  // ribbon joins equal copies, a twisted one joins opposite copies; the
  // surface is orientable iff no vertex has both copies in one class.
  DisjointSets ds(2 * g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const int u = g.vertex_of({e, 1});
    const int w = g.vertex_of({e, 2});
    const int twist = g.edge(e).sign == Sign::Minus ? 1 : 0;
    ds.unite(2 * u, 2 * w + twist);
    ds.unite(2 * u + 1, 2 * w + (1 - twist));
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (ds.find(2 * v) == ds.find(2 * v + 1)) return false;
  return true;
}

std::optional<std::vector<bool>> orienting_flips(const RibbonGraph& g) {
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
        const int b = g.vertex_of({e, 2});
        const int w = a == u ? b : a;
        const int want = bit[u] ^ (g.edge(e).sign == Sign::Minus ? 1 : 0);
        if (bit[w] < 0) {
          bit[w] = want;
          queue.push(w);
        } else if (bit[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<bool> out(n);
  for (int v = 0; v < n; ++v) out[v] = bit[v] == 1;
  return out;
}

namespace {

RibbonGraph flip_vertices(const RibbonGraph& g, const std::vector<bool>& flip) {
  std::vector<Vertex> vertices = g.vertices();
  std::vector<Edge> edges = g.edges();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (flip[v]) std::reverse(vertices[v].rotation.begin(), vertices[v].rotation.end());
  for (int e = 0; e < g.edge_count(); ++e)
    if (flip[g.vertex_of({e, 1})] != flip[g.vertex_of({e, 2})]) edges[e].sign = toggled(edges[e].sign);
  return RibbonGraph(std::move(vertices), std::move(edges));
}

}  // namespace

RibbonGraph normalize_orientation(const RibbonGraph& g) {
  const auto flips = orienting_flips(g);
  if (!flips) throw PreconditionError("ribbon graph is not orientable");
  return flip_vertices(g, *flips);
}

RibbonGraph flip_vertex(const RibbonGraph& g, int v) {
  require_valid(g);
  if (v < 0 || v >= g.vertex_count()) throw UnknownVertexError("#" + std::to_string(v));
  std::vector<bool> flip(g.vertex_count(), false);
  flip[v] = true;
  return flip_vertices(g, flip);
}

RibbonGraph flip_vertex(const RibbonGraph& g, const std::string& vertex_name) {
  return flip_vertex(g, g.vertex_index(vertex_name));
}

// ---------------------------------------------------------------------------
// Canonical form.
//
// A connected graph is read off by a breadth-first traversal seeded at one
// edge end and one reading direction. Each newly reached vertex is read in
// the direction that makes the discovering edge untwisted, starting at the
// end through which it was reached. The code is the sequence of edge numbers
// around each vertex followed by the effective twist of each edge; the
// minimum over all seeds is an isomorphism invariant and determines the
// graph.

namespace {

struct Traversal {
  std::vector<int> code;
  std::vector<int> vertex_order;
  std::vector<int> start;
  std::vector<bool> reversed;
  std::vector<int> edge_order;
  std::vector<int> edge_number;
  std::vector<int> vertex_number;
};

Traversal traverse(const RibbonGraph& g, EdgeEnd seed, bool seed_reversed) {
  Traversal t;
  const int n = g.vertex_count();
  t.start.assign(n, -1);
  t.reversed.assign(n, false);
  t.vertex_number.assign(n, -1);
  t.edge_number.assign(g.edge_count(), -1);

  const auto at = [&](int v, int k) {
    const auto& rot = g.vertex(v).rotation;
    const int d = static_cast<int>(rot.size());
    const int p = t.reversed[v] ? ((t.start[v] - k) % d + d) % d : (t.start[v] + k) % d;
    return rot[p];
  };

  const int v0 = g.vertex_of(seed);
  t.vertex_number[v0] = 0;
  t.start[v0] = g.location(seed).position;
  t.reversed[v0] = seed_reversed;
  t.vertex_order.push_back(v0);
  for (std::size_t i = 0; i < t.vertex_order.size(); ++i) {
    const int v = t.vertex_order[i];
    const int d = g.degree(v);
    t.code.push_back(d);
    for (int k = 0; k < d; ++k) {
      const EdgeEnd h = at(v, k);
      if (t.edge_number[h.edge] < 0) {
        t.edge_number[h.edge] = static_cast<int>(t.edge_order.size());
        t.edge_order.push_back(h.edge);
        const EdgeEnd o = h.other();
        const int w = g.vertex_of(o);
        if (t.vertex_number[w] < 0) {
          t.vertex_number[w] = static_cast<int>(t.vertex_order.size());
          t.vertex_order.push_back(w);
          t.start[w] = g.location(o).position;
          t.reversed[w] = t.reversed[v] != (g.edge(h.edge).sign == Sign::Minus);
        }
      }
      t.code.push_back(t.edge_number[h.edge]);
    }
  }
  for (int e : t.edge_order) {
    const bool twisted = g.edge(e).sign == Sign::Minus;
    const bool flipped_ends = t.reversed[g.vertex_of({e, 1})] != t.reversed[g.vertex_of({e, 2})];
    t.code.push_back(twisted != flipped_ends ? 1 : 0);
  }
  return t;
}

Traversal best_traversal(const RibbonGraph& g, const std::vector<int>& component) {
  std::optional<Traversal> best;
  for (int v : component) {
    for (const EdgeEnd& h : g.vertex(v).rotation) {
      for (bool rev : {false, true}) {
        Traversal t = traverse(g, h, rev);
        if (!best || t.code < best->code) best = std::move(t);
      }
    }
  }
  if (!best) {
    // isolated vertex
    Traversal t;
    t.code = {0};
    t.vertex_order = {component.front()};
    best = std::move(t);
  }
  return *best;
}

std::vector<Traversal> sorted_traversals(const RibbonGraph& g) {
  std::vector<Traversal> out;
  for (const auto& comp : connected_components(g)) out.push_back(best_traversal(g, comp));
  std::sort(out.begin(), out.end(),
            [](const Traversal& a, const Traversal& b) { return a.code < b.code; });
  return out;
}

}  // namespace

std::vector<int> canonical_key(const RibbonGraph& g) {
  std::vector<int> key;
  for (const auto& t : sorted_traversals(g)) {
    key.insert(key.end(), t.code.begin(), t.code.end());
    key.push_back(-1);
  }
  return key;
}

RibbonGraph canonical_form(const RibbonGraph& g) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (const auto& t : sorted_traversals(g)) {
    const int edge_base = static_cast<int>(edges.size());
    const int local_edges = static_cast<int>(t.edge_order.size());
    for (int i = 0; i < local_edges; ++i) edges.push_back({"e" + std::to_string(edge_base + i), Sign::Plus});
    std::vector<bool> first_seen(local_edges, false);
    for (int v : t.vertex_order) {
      Vertex out{"v" + std::to_string(vertices.size()), {}};
      const auto& rot = g.vertex(v).rotation;
      const int d = static_cast<int>(rot.size());
      for (int k = 0; k < d; ++k) {
        const int p = t.reversed[v] ? ((t.start[v] - k) % d + d) % d : (t.start[v] + k) % d;
        const int local = t.edge_number[rot[p].edge];
        const int end = first_seen[local] ? 2 : 1;
        first_seen[local] = true;
        out.rotation.push_back({edge_base + local, end});
      }
      vertices.push_back(std::move(out));
    }
    // effective twists sit at the tail of the code
    for (int i = 0; i < local_edges; ++i)
      if (t.code[t.code.size() - local_edges + i] == 1) edges[edge_base + i].sign = Sign::Minus;
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

bool are_isomorphic(const RibbonGraph& g, const RibbonGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  return canonical_key(g) == canonical_key(h);
}

}  // namespace ribbonlab
