#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ribbonlab/error.hpp"

namespace ribbonlab {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

inline Sign toggled(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// One end of an edge, i.e. one common line segment of the ribbon.
/// `end` is 1 or 2.
struct EdgeEnd {
  int edge = 0;
  int end = 1;

  /// Dense index in [0, 2|E|).
  int dart() const { return 2 * edge + (end - 1); }
  static EdgeEnd from_dart(int d) { return {d / 2, d % 2 + 1}; }
  EdgeEnd other() const { return {edge, 3 - end}; }

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

struct Vertex {
  std::string name;
  std::vector<EdgeEnd> rotation;  // counterclockwise cyclic order

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string name;
  Sign sign = Sign::Plus;  // Minus = half-twisted ribbon

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge subsets are named by edge label so they survive operations that
/// renumber edges (deletion) or rename vertices (partial duality).
using EdgeSet = std::set<std::string>;

/// A ribbon graph stored as a signed rotation system.
///
/// Side conventions used throughout the library: at end 1 of an edge, side
/// L is the side facing the counterclockwise-next edge end in the rotation;
/// at end 2, side L faces the counterclockwise-previous one. With these
/// labels an untwisted ribbon connects L to L and R to R, and a twisted
/// ribbon swaps them.
class RibbonGraph {
 public:
  struct Location {
    int vertex = -1;
    int position = -1;
  };

  RibbonGraph() = default;
  RibbonGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Vertex& vertex(int v) const { return vertices_.at(v); }
  const Edge& edge(int e) const { return edges_.at(e); }
  int degree(int v) const { return static_cast<int>(vertices_.at(v).rotation.size()); }

  /// Where an edge end sits. Only meaningful on valid graphs.
  Location location(EdgeEnd h) const { return locations_.at(h.dart()); }
  int vertex_of(EdgeEnd h) const { return location(h).vertex; }
  bool is_loop(int e) const { return vertex_of({e, 1}) == vertex_of({e, 2}); }

  /// Edge end following/preceding `h` in its vertex rotation.
  EdgeEnd next_in_rotation(EdgeEnd h) const;
  EdgeEnd prev_in_rotation(EdgeEnd h) const;

  std::optional<int> find_edge(const std::string& name) const;
  std::optional<int> find_vertex(const std::string& name) const;
  int edge_index(const std::string& name) const;  // throws UnknownEdgeError
  int vertex_index(const std::string& name) const;  // throws UnknownVertexError

  /// Membership mask over edge indices; throws UnknownEdgeError.
  std::vector<bool> edge_mask(const EdgeSet& set) const;
  EdgeSet edge_set(const std::vector<bool>& mask) const;
  EdgeSet all_edges() const;
  EdgeSet complement(const EdgeSet& set) const;

  /// Labelled equality: same vertex list, same rotations as sequences,
  /// same edge list.
  friend bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Location> locations_;
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  enum class Kind {
    kDuplicateEdgeEnd,
    kUnplacedEdgeEnd,
    kBadEdgeReference,
    kBadEndIndex,
    kDuplicateVertexName,
    kDuplicateEdgeName,
    kEmptyName,
  };
  Kind kind;
  std::string message;
};

std::vector<Violation> validate(const RibbonGraph& g);

/// Throws StructuralError listing the violations, if any.
void require_valid(const RibbonGraph& g);

// ---------------------------------------------------------------------------
// Boundary components

enum class Side : std::uint8_t { L = 0, R = 1 };

inline Side flipped(Side s) { return s == Side::L ? Side::R : Side::L; }

/// Side of the edge end that faces the counterclockwise-next end.
inline Side next_side(EdgeEnd h) { return h.end == 1 ? Side::L : Side::R; }
inline Side prev_side(EdgeEnd h) { return flipped(next_side(h)); }

struct HalfEdgeSegment {
  EdgeEnd end;
  Side side = Side::L;

  int index() const { return 2 * end.dart() + static_cast<int>(side); }
  static HalfEdgeSegment from_index(int i) {
    return {EdgeEnd::from_dart(i / 2), static_cast<Side>(i % 2)};
  }

  friend bool operator==(const HalfEdgeSegment&, const HalfEdgeSegment&) = default;
};

/// Partner of a half-edge segment across its vertex line segment (corner).
HalfEdgeSegment corner_partner(const RibbonGraph& g, HalfEdgeSegment s);

/// Partner of a half-edge segment along its edge line segment.
HalfEdgeSegment edge_partner(const RibbonGraph& g, HalfEdgeSegment s);

struct BoundaryDecomposition {
  /// Each component is a cyclic sequence alternating edge line segment and
  /// vertex line segment steps, starting with an edge step.
  std::vector<std::vector<HalfEdgeSegment>> components;
  /// Isolated vertices; free vertex i is component components.size() + i.
  std::vector<int> free_vertices;
  /// Component index by HalfEdgeSegment::index().
  std::vector<int> component_of;

  int count() const { return static_cast<int>(components.size() + free_vertices.size()); }
  int component(HalfEdgeSegment s) const { return component_of.at(s.index()); }
};

BoundaryDecomposition trace_boundary(const RibbonGraph& g);

/// Connected components as vertex index lists (ordered by smallest vertex).
std::vector<std::vector<int>> connected_components(const RibbonGraph& g);

struct EulerCharacteristic {
  std::vector<int> per_component;  // aligned with connected_components()
  int total = 0;
};

EulerCharacteristic euler_characteristic(const RibbonGraph& g);

bool is_orientable(const RibbonGraph& g);

/// Per-vertex flips that make every edge sign +1, or nullopt when the graph
/// is non-orientable. Vertices are assigned along a spanning forest.
std::optional<std::vector<bool>> orienting_flips(const RibbonGraph& g);

/// Applies orienting_flips(); throws PreconditionError if non-orientable.
RibbonGraph normalize_orientation(const RibbonGraph& g);

RibbonGraph flip_vertex(const RibbonGraph& g, int v);
RibbonGraph flip_vertex(const RibbonGraph& g, const std::string& vertex_name);

// ---------------------------------------------------------------------------
// Isomorphism

/// Complete isomorphism invariant: two graphs are isomorphic (vertex and
/// edge bijection plus vertex flips, rotations up to cyclic shift) iff their
/// keys are equal.
std::vector<int> canonical_key(const RibbonGraph& g);

/// Representative of the isomorphism class with vertices v0.. and edges e0..
RibbonGraph canonical_form(const RibbonGraph& g);

bool are_isomorphic(const RibbonGraph& g, const RibbonGraph& h);

}  // namespace ribbonlab
