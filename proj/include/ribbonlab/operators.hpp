#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ribbonlab/ribbon_graph.hpp"

namespace ribbonlab {

RibbonGraph delete_edges(const RibbonGraph& g, const EdgeSet& edges);

/// Adds a half-twist to every edge in the set.
RibbonGraph partial_petrial(const RibbonGraph& g, const EdgeSet& edges);
RibbonGraph petrial(const RibbonGraph& g);

/// Partial dual, computed on the arrow presentation. Circles that carry no
/// arrow of `edges` keep their vertex name and rotation; new circles get
/// fresh names f0, f1, ... (primed when a name is taken). Edge labels and
/// edge order are preserved.
RibbonGraph partial_dual(const RibbonGraph& g, const EdgeSet& edges);
RibbonGraph geometric_dual(const RibbonGraph& g);

/// G/A := G^A - A.
RibbonGraph contract(const RibbonGraph& g, const EdgeSet& edges);

/// G - deleted / contracted. Throws PreconditionError if the sets overlap.
RibbonGraph minor(const RibbonGraph& g, const EdgeSet& deleted, const EdgeSet& contracted);

/// The six elements of <d, t | d^2, t^2, (dt)^3>. Words read right to
/// left: kDualTwist applies the twist first, then the dual.
enum class TwistElement { kIdentity, kDual, kTwist, kDualTwist, kTwistDual, kDualTwistDual };

/// Primitive steps in application order ('d' or 't').
std::string_view application_order(TwistElement x);
std::string_view to_string(TwistElement x);  // "1", "d", "t", "dt", "td", "dtd"
TwistElement parse_twist_element(std::string_view s);  // also accepts "tdt"
TwistElement compose(TwistElement outer, TwistElement inner);  // outer after inner

using TwistWord = std::map<std::string, TwistElement>;

/// Parses "e1:dt,e2:1,e3:d". Throws ParseError (line 1) on bad syntax.
TwistWord parse_twist_word(std::string_view text);

/// Applies each edge's element; edges absent from the word are fixed.
RibbonGraph apply_twist_word(const RibbonGraph& g, const TwistWord& word);

/// Applies a sequence of primitive steps, e.g. "tdtdtd", to one edge set.
RibbonGraph apply_steps(const RibbonGraph& g, const EdgeSet& edges, std::string_view steps);

}  // namespace ribbonlab
