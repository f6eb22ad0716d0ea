#pragma once

#include <string>
#include <string_view>

#include "ribbonlab/ribbon_graph.hpp"

namespace ribbonlab {

// Line-oriented graph format, '#' starts a comment:
//
//   vertex <name>: <edge>.<end> <edge>.<end> ...   (counterclockwise)
//   edge <name>: + | -
//
// Names may not contain whitespace, ':', '.', or '#'. Edges are numbered in
// the order of their `edge` lines, vertices in the order of their `vertex`
// lines.

/// Throws ParseError with 1-based line/column on malformed input and
/// StructuralError if the parsed rotation system is invalid.
RibbonGraph parse_graph(std::string_view text);

RibbonGraph read_graph_file(const std::string& path);

/// Vertex lines then edge lines, one space after each ':', trailing newline.
std::string serialize_graph(const RibbonGraph& g);

}  // namespace ribbonlab
