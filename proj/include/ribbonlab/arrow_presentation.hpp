#pragma once

#include <string>
#include <vector>

#include "ribbonlab/ribbon_graph.hpp"

namespace ribbonlab {

/// A labelled arrow on a circle. `forward` is relative to the circle's
/// reference sense; `end` records which edge end the arrow stands for so
/// that conversions round-trip with labels intact.
struct Arrow {
  int edge = 0;
  int end = 1;
  bool forward = true;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct ArrowCircle {
  std::string name;
  std::vector<Arrow> arrows;  // cyclic, in reference sense

  friend bool operator==(const ArrowCircle&, const ArrowCircle&) = default;
};

/// Circles with paired labelled arrows. Convention: an edge is untwisted
/// iff its two arrows point the same way relative to their circles, so
/// reversing one arrow of e is the same as adding a half-twist to e.
struct ArrowPresentation {
  std::vector<ArrowCircle> circles;
  std::vector<std::string> edge_names;

  friend bool operator==(const ArrowPresentation&, const ArrowPresentation&) = default;
};

ArrowPresentation to_arrow_presentation(const RibbonGraph& g);

/// Throws MalformedPresentationError unless every label occurs on exactly
/// two arrows, one tagged end 1 and the other end 2.
RibbonGraph from_arrow_presentation(const ArrowPresentation& a);

}  // namespace ribbonlab
