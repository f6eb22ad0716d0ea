#pragma once

#include <optional>
#include <vector>

#include "ribbonlab/ribbon_graph.hpp"

namespace ribbonlab {

enum class Colour : std::uint8_t { kRed = 0, kBlue = 1 };

inline Colour other(Colour c) { return c == Colour::kRed ? Colour::kBlue : Colour::kRed; }
inline const char* to_string(Colour c) { return c == Colour::kRed ? "red" : "blue"; }

/// One colour per boundary component, indexed as in BoundaryDecomposition
/// (traced components first, then free vertices).
struct FaceColouring {
  std::vector<Colour> colours;
};

bool is_eulerian(const RibbonGraph& g);

/// Bipartiteness of the underlying multigraph; a loop is an odd cycle.
bool is_bipartite(const RibbonGraph& g);

/// Number of edge line segments on each boundary component, in component
/// order. Isolated vertices give 0.
std::vector<int> face_degrees(const RibbonGraph& g);

bool is_even_face(const RibbonGraph& g);

/// Proper red/blue colouring of the face-adjacency multigraph, or nullopt.
/// The lowest-indexed face of each adjacency component is red.
std::optional<FaceColouring> checkerboard_colouring(const RibbonGraph& g);

bool is_checkerboard_colourable(const RibbonGraph& g);

/// True iff the colouring is proper on g: every edge has its two edge line
/// segments on faces of different colours.
bool is_valid_face_colouring(const RibbonGraph& g, const FaceColouring& colouring);

}  // namespace ribbonlab
