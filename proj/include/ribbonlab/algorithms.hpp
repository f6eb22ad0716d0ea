#pragma once

#include <optional>
#include <vector>

#include "ribbonlab/medial.hpp"
#include "ribbonlab/predicates.hpp"
#include "ribbonlab/ribbon_graph.hpp"

namespace ribbonlab {

/// Edges whose half-twist must be toggled to make the graph orientable:
/// vertices are oriented along a spanning forest and every edge that
/// disagrees with that orientation (including every twisted loop) is
/// returned.
EdgeSet orienting_petrial_set(const RibbonGraph& g);

/// Checkerboard colourable twisted dual (G^{tau(A)})^{delta(D)}.
struct TwistedDualCertificate {
  EdgeSet twisted;  // A
  EdgeSet dualled;  // D
  RibbonGraph orientable_host;  // G^{tau(A)}
  CDClassification classification;  // on orientable_host's edges
  RibbonGraph result;
  FaceColouring colouring;
};

/// Twist to orientability, direct the medial graph along its straight-ahead
/// walks, take D as the d-edges and dualize them. Throws InvariantFailure
/// if the result is not checkerboard colourable.
TwistedDualCertificate checkerboard_twisted_dual(const RibbonGraph& g, bool reverse_walks = false);

/// Red/blue around every vertex boundary, alternating, starting at
/// rotation position 0.
struct VertexColouring {
  /// Colour of corner i (between rotation positions i and i+1), per vertex.
  std::vector<std::vector<Colour>> corners;
  /// Colour by HalfEdgeSegment::index(); a half-edge line segment takes the
  /// colour of the corner it borders.
  std::vector<Colour> segments;
};

/// Throws PreconditionError if some vertex has odd degree.
VertexColouring vertex_checkerboard_colouring(const RibbonGraph& g, Colour first = Colour::kRed);

/// Edges whose ribbon joins half-edge line segments of different colours.
EdgeSet inconsistent_edges(const RibbonGraph& g, const VertexColouring& colouring);

struct PartialPetrialCertificate {
  EdgeSet twisted;  // I
  VertexColouring vertex_colouring;
  RibbonGraph result;
  FaceColouring colouring;
};

/// G^{tau(I)} for the inconsistent edges I of the vertex colouring. Throws
/// PreconditionError for non-Eulerian input and InvariantFailure if the
/// result is not checkerboard coloured by the inherited segment colours.
PartialPetrialCertificate checkerboard_partial_petrial(const RibbonGraph& g,
                                                       Colour first = Colour::kRed);

/// Searches all orientations of the boundary components of G - A (G
/// oriented) for one where, for every e outside A, the two edge line
/// segments of e get opposite signs, and for every f in A, the two common
/// line segments of f get opposite signs. Exponential in the number of
/// components. Throws PreconditionError if G is non-orientable.
bool boundary_orientation_criterion(const RibbonGraph& g, const EdgeSet& edges);

}  // namespace ribbonlab
