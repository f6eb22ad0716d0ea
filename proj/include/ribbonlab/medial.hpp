#pragma once

#include <string>
#include <vector>

#include "ribbonlab/ribbon_graph.hpp"

namespace ribbonlab {

/// Port at a medial vertex. Cyclic (counterclockwise) order around the
/// vertex is end1-L, end1-R, end2-R, end2-L, so opposite ports differ by 2.
struct PortRef {
  int vertex = 0;  // medial vertex == host edge index
  int port = 0;    // 0..3

  friend bool operator==(const PortRef&, const PortRef&) = default;
};

int port_index(int end, Side side);
int port_end(int port);
Side port_side(int port);
inline int opposite_port(int port) { return (port + 2) % 4; }

/// A medial edge runs along one vertex line segment (corner) of the host.
struct MedialEdge {
  PortRef a;
  PortRef b;
  int host_vertex = 0;
  int corner = 0;  // between rotation positions corner and corner + 1
};

/// Medial graph of an orientable ribbon graph. The host is stored with its
/// orientation normalized (all edge signs +1), so port sides are global.
class MedialGraph {
 public:
  explicit MedialGraph(RibbonGraph normalized_host);

  const RibbonGraph& host() const { return host_; }
  const std::vector<MedialEdge>& edges() const { return edges_; }
  int vertex_count() const { return host_.edge_count(); }
  /// Host vertices of degree 0; each carries a free loop.
  const std::vector<int>& free_loops() const { return free_loops_; }
  /// Medial edge attached to a port.
  int edge_at(PortRef p) const { return edge_at_.at(4 * p.vertex + p.port); }

  /// Standalone export for inspection: one vertex per host edge with its
  /// four ports in cyclic order.
  RibbonGraph to_ribbon_graph() const;

 private:
  RibbonGraph host_;
  std::vector<MedialEdge> edges_;
  std::vector<int> free_loops_;
  std::vector<int> edge_at_;
};

/// Throws PreconditionError for a non-orientable host.
MedialGraph build_medial(const RibbonGraph& host);

/// Direction per medial edge: true means a -> b.
struct AllCrossingDirection {
  std::vector<bool> a_to_b;
};

/// True iff the port receives an arrowhead (the medial edge points into it).
bool is_head(const MedialGraph& m, const AllCrossingDirection& dir, PortRef p);

/// head, head, tail, tail in cyclic order at every medial vertex.
bool is_all_crossing(const MedialGraph& m, const AllCrossingDirection& dir);

/// Directs every straight-ahead closed walk along its traversal order. Walks
/// are started from medial edges in index order; `reverse_walks` flips the
/// orientation of every walk.
AllCrossingDirection straight_ahead_direction(const MedialGraph& m, bool reverse_walks = false);

enum class CrossingType : std::uint8_t { kC, kD };

/// c-vertices take the smoothing along the edge sides (ports with equal
/// side), d-vertices the smoothing across the edge ends (ports with equal
/// end); the type is whichever of the two is direction-consistent.
struct CDClassification {
  std::vector<CrossingType> type;  // per host edge

  EdgeSet d_edges(const RibbonGraph& host) const;
};

/// Throws PreconditionError if `dir` is not all-crossing.
CDClassification classify_cd(const MedialGraph& m, const AllCrossingDirection& dir);

/// A line segment of the host crossed by a smoothed curve at a medial vertex:
/// an edge line segment of a c-edge (`which` is the side, 0 = L) or a common
/// line segment of a d-edge (`which` is the end, 1 or 2). `positive` iff the
/// curve runs along it in the direction induced by the host orientation.
struct SignedSegment {
  CrossingType kind = CrossingType::kC;
  int edge = 0;
  int which = 0;
  bool positive = false;
};

struct SmoothedCurve {
  std::vector<int> medial_edges;  // in traversal order
  std::vector<SignedSegment> segments;
  int free_loop_vertex = -1;  // >= 0 for a free loop
};

/// Smooths every medial vertex according to its type; throws
/// InvariantFailure if a smoothed strand is not direction-consistent.
std::vector<SmoothedCurve> smooth(const MedialGraph& m, const AllCrossingDirection& dir,
                                  const CDClassification& cls);

/// DOT rendering with directions and c/d labels.
std::string medial_to_dot(const MedialGraph& m, const AllCrossingDirection& dir,
                          const CDClassification& cls);

}  // namespace ribbonlab
