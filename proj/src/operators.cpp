#include "ribbonlab/operators.hpp"

#include <algorithm>
#include <array>

#include "ribbonlab/arrow_presentation.hpp"

namespace ribbonlab {

RibbonGraph delete_edges(const RibbonGraph& g, const EdgeSet& edges) {
  require_valid(g);
  const auto mask = g.edge_mask(edges);
  std::vector<int> renumber(g.edge_count(), -1);
  std::vector<Edge> kept;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (mask[e]) continue;
    renumber[e] = static_cast<int>(kept.size());
    kept.push_back(g.edge(e));
  }
  std::vector<Vertex> vertices;
  for (const auto& v : g.vertices()) {
    Vertex out{v.name, {}};
    for (const auto& h : v.rotation)
      if (!mask[h.edge]) out.rotation.push_back({renumber[h.edge], h.end});
    vertices.push_back(std::move(out));
  }
  return RibbonGraph(std::move(vertices), std::move(kept));
}

RibbonGraph partial_petrial(const RibbonGraph& g, const EdgeSet& edges) {
  require_valid(g);
  const auto mask = g.edge_mask(edges);
  std::vector<Edge> out = g.edges();
  for (int e = 0; e < g.edge_count(); ++e)
    if (mask[e]) out[e].sign = toggled(out[e].sign);
  return RibbonGraph(g.vertices(), std::move(out));
}

RibbonGraph petrial(const RibbonGraph& g) { return partial_petrial(g, g.all_edges()); }

// Every arrow occupies an interval of its circle with a start and an end
// point in the circle's reference sense. Points are joined by two kinds of
// links: the arcs between consecutive arrows, and the arrows themselves.
// The dual move on e deletes e's two arrows and joins head(a) -> tail(b)
// and head(b) -> tail(a) instead; the new circles are the cycles of the
// resulting two-regular link structure.
RibbonGraph partial_dual(const RibbonGraph& g, const EdgeSet& edges) {
  const ArrowPresentation ap = to_arrow_presentation(g);
  const auto mask = g.edge_mask(edges);

  struct Link {
    int other = -1;
    int edge = -1;
    int end = 0;
    int tail = -1;  // point where the arrow on this link starts
  };

  int total = 0;
  for (const auto& c : ap.circles) total += static_cast<int>(c.arrows.size());
  std::vector<int> arc(2 * total, -1);
  std::vector<Link> link(2 * total);
  std::vector<int> circle_first(ap.circles.size(), 0);
  std::vector<std::array<int, 2>> occurrence(ap.edge_names.size(), {-1, -1});

  int k = 0;
  for (std::size_t c = 0; c < ap.circles.size(); ++c) {
    circle_first[c] = k;
    const int n = static_cast<int>(ap.circles[c].arrows.size());
    for (int i = 0; i < n; ++i) {
      const int cur_end = 2 * (k + i) + 1;
      const int next_start = 2 * (k + (i + 1) % n);
      arc[cur_end] = next_start;
      arc[next_start] = cur_end;
      const Arrow& a = ap.circles[c].arrows[i];
      occurrence[a.edge][a.end - 1] = k + i;
    }
    k += n;
  }

  const auto arrow_at = [&](int occ) -> const Arrow& {
    for (std::size_t c = ap.circles.size(); c-- > 0;)
      if (circle_first[c] <= occ) return ap.circles[c].arrows[occ - circle_first[c]];
    throw InvariantFailure("arrow occurrence out of range");
  };
  const auto tail_of = [&](int occ) { return arrow_at(occ).forward ? 2 * occ : 2 * occ + 1; };
  const auto head_of = [&](int occ) { return arrow_at(occ).forward ? 2 * occ + 1 : 2 * occ; };
  const auto join = [&](int from, int to, int edge, int end) {
    link[from] = {to, edge, end, from};
    link[to] = {from, edge, end, from};
  };

  for (int e = 0; e < static_cast<int>(ap.edge_names.size()); ++e) {
    const int alpha = occurrence[e][0];
    const int beta = occurrence[e][1];
    if (mask[e]) {
      join(head_of(alpha), tail_of(beta), e, 1);
      join(head_of(beta), tail_of(alpha), e, 2);
    } else {
      join(tail_of(alpha), head_of(alpha), e, 1);
      join(tail_of(beta), head_of(beta), e, 2);
    }
  }

  std::set<std::string> taken;
  for (const auto& c : ap.circles) {
    bool touched = false;
    for (const auto& a : c.arrows) touched = touched || mask[a.edge];
    if (!touched) taken.insert(c.name);
  }
  int fresh_counter = 0;
  const auto fresh_name = [&] {
    std::string name = "f" + std::to_string(fresh_counter++);
    while (taken.count(name)) name += "'";
    taken.insert(name);
    return name;
  };

  std::vector<bool> visited(2 * total, false);
  const auto trace = [&](int start) {
    std::vector<Arrow> arrows;
    int p = start;
    do {
      const Link& l = link[p];
      visited[p] = visited[l.other] = true;
      arrows.push_back({l.edge, l.end, l.tail == p});
      p = arc[l.other];
    } while (p != start);
    return arrows;
  };

  ArrowPresentation out;
  out.edge_names = ap.edge_names;
  for (std::size_t c = 0; c < ap.circles.size(); ++c) {
    const auto& circle = ap.circles[c];
    bool touched = false;
    for (const auto& a : circle.arrows) touched = touched || mask[a.edge];
    if (!touched) {
      out.circles.push_back(circle);
      continue;
    }
    const int first = 2 * circle_first[c];
    const int last = first + 2 * static_cast<int>(circle.arrows.size());
    for (int p = first; p < last; ++p) {
      if (visited[p]) continue;
      out.circles.push_back({fresh_name(), trace(p)});
    }
  }
  return from_arrow_presentation(out);
}

RibbonGraph geometric_dual(const RibbonGraph& g) { return partial_dual(g, g.all_edges()); }

RibbonGraph contract(const RibbonGraph& g, const EdgeSet& edges) {
  return delete_edges(partial_dual(g, edges), edges);
}

RibbonGraph minor(const RibbonGraph& g, const EdgeSet& deleted, const EdgeSet& contracted) {
  for (const auto& e : deleted)
    if (contracted.count(e)) throw PreconditionError("edge '" + e + "' both deleted and contracted");
  g.edge_mask(deleted);  // validates names
  return delete_edges(contract(g, contracted), deleted);
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<TwistElement, 6> kElements = {
    TwistElement::kIdentity,  TwistElement::kDual,      TwistElement::kTwist,
    TwistElement::kDualTwist, TwistElement::kTwistDual, TwistElement::kDualTwistDual};

using Perm = std::array<int, 3>;

// d and t act as the transpositions (0 1) and (1 2).
Perm permutation_of(std::string_view steps) {
  Perm p = {0, 1, 2};
  for (char s : steps) {
    if (s == 'd') std::swap(p[0], p[1]);
    else std::swap(p[1], p[2]);
  }
  return p;
}

TwistElement element_of(std::string_view steps) {
  const Perm p = permutation_of(steps);
  for (auto x : kElements)
    if (permutation_of(application_order(x)) == p) return x;
  throw InvariantFailure("twist group lookup failed");
}

}  // namespace

std::string_view application_order(TwistElement x) {
  switch (x) {
    case TwistElement::kIdentity: return "";
    case TwistElement::kDual: return "d";
    case TwistElement::kTwist: return "t";
    case TwistElement::kDualTwist: return "td";
    case TwistElement::kTwistDual: return "dt";
    case TwistElement::kDualTwistDual: return "dtd";
  }
  return "";
}

std::string_view to_string(TwistElement x) {
  switch (x) {
    case TwistElement::kIdentity: return "1";
    case TwistElement::kDual: return "d";
    case TwistElement::kTwist: return "t";
    case TwistElement::kDualTwist: return "dt";
    case TwistElement::kTwistDual: return "td";
    case TwistElement::kDualTwistDual: return "dtd";
  }
  return "?";
}

TwistElement parse_twist_element(std::string_view s) {
  if (s == "tdt") return TwistElement::kDualTwistDual;
  for (auto x : kElements)
    if (to_string(x) == s) return x;
  throw ParseError(1, 1, "unknown twist element '" + std::string(s) + "'");
}

TwistElement compose(TwistElement outer, TwistElement inner) {
  std::string steps(application_order(inner));
  steps += application_order(outer);
  return element_of(steps);
}

TwistWord parse_twist_word(std::string_view text) {
  TwistWord word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == item.size())
      throw ParseError(1, static_cast<int>(pos) + 1, "expected <edge>:<element>");
    const std::string edge(item.substr(0, colon));
    const std::string_view element = item.substr(colon + 1);
    if (element != "tdt" &&
        std::none_of(kElements.begin(), kElements.end(), [&](TwistElement x) { return to_string(x) == element; }))
      throw ParseError(1, static_cast<int>(pos + colon) + 2,
                       "unknown twist element '" + std::string(element) + "'");
    if (!word.emplace(edge, parse_twist_element(element)).second)
      throw ParseError(1, static_cast<int>(pos) + 1, "edge '" + edge + "' listed twice");
    pos = comma + 1;
  }
  return word;
}

RibbonGraph apply_steps(const RibbonGraph& g, const EdgeSet& edges, std::string_view steps) {
  RibbonGraph out = g;
  for (char s : steps) out = s == 'd' ? partial_dual(out, edges) : partial_petrial(out, edges);
  return out;
}

RibbonGraph apply_twist_word(const RibbonGraph& g, const TwistWord& word) {
  require_valid(g);
  std::map<TwistElement, EdgeSet> groups;
  for (const auto& [edge, x] : word) {
    g.edge_index(edge);
    groups[x].insert(edge);
  }
  RibbonGraph out = g;
  for (const auto& [x, edges] : groups) out = apply_steps(out, edges, application_order(x));
  return out;
}

}  // namespace ribbonlab
