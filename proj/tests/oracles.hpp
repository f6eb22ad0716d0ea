#pragma once

// Slow, independent reference implementations used only to cross-check the
// library. Nothing here shares code with src/ beyond the RibbonGraph type.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ribbonlab/ribbon_graph.hpp"

namespace oracle {

using namespace ribbonlab;

inline bool cyclic_equal(const std::vector<EdgeEnd>& a, const std::vector<EdgeEnd>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = a[(i + shift) % a.size()] == b[i];
    if (same) return true;
  }
  return false;
}

/// Every edge permutation x end swap x vertex flip, then a greedy match of
/// rotations up to cyclic shift. Exponential; fine up to ~4 edges.
inline bool brute_isomorphic(const RibbonGraph& g, const RibbonGraph& h) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  if (m != h.edge_count() || n != h.vertex_count()) return false;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint32_t swap = 0; swap < (1u << m); ++swap) {
      for (std::uint32_t flip = 0; flip < (1u << n); ++flip) {
        std::vector<int> sign(m);
        for (int e = 0; e < m; ++e) sign[e] = g.edge(e).sign == Sign::Plus ? 1 : -1;
        std::vector<std::vector<EdgeEnd>> images;
        for (int v = 0; v < n; ++v) {
          auto rot = g.vertex(v).rotation;
          if ((flip >> v) & 1u) {
            std::reverse(rot.begin(), rot.end());
            for (const auto& x : rot) sign[x.edge] = -sign[x.edge];
          }
          for (auto& x : rot) {
            const int end = ((swap >> x.edge) & 1u) ? 3 - x.end : x.end;
            x = {perm[x.edge], end};
          }
          images.push_back(std::move(rot));
        }
        bool ok = true;
        for (int e = 0; e < m && ok; ++e)
          ok = (h.edge(perm[e]).sign == Sign::Plus ? 1 : -1) == sign[e];
        if (!ok) continue;
        std::vector<bool> used(n, false);
        for (int v = 0; v < n && ok; ++v) {
          bool matched = false;
          for (int w = 0; w < n && !matched; ++w)
            if (!used[w] && cyclic_equal(images[v], h.vertex(w).rotation)) matched = used[w] = true;
          ok = matched;
        }
        if (ok) return true;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// A random isomorphic copy: vertices and edges shuffled and renamed, ends
/// swapped, vertices flipped and rotations shifted.
inline RibbonGraph scramble(const RibbonGraph& g, std::mt19937& rng) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  std::vector<int> eperm(m), vperm(n);
  std::iota(eperm.begin(), eperm.end(), 0);
  std::iota(vperm.begin(), vperm.end(), 0);
  std::shuffle(eperm.begin(), eperm.end(), rng);
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::bernoulli_distribution coin;
  std::vector<bool> swap(m);
  for (int e = 0; e < m; ++e) swap[e] = coin(rng);
  std::vector<int> sign(m);
  for (int e = 0; e < m; ++e) sign[e] = g.edge(e).sign == Sign::Plus ? 1 : -1;
  std::vector<Vertex> vertices(n);
  for (int v = 0; v < n; ++v) {
    auto rot = g.vertex(v).rotation;
    if (coin(rng)) {
      std::reverse(rot.begin(), rot.end());
      for (const auto& x : rot) sign[x.edge] = -sign[x.edge];
    }
    if (!rot.empty()) std::rotate(rot.begin(), rot.begin() + rng() % rot.size(), rot.end());
    for (auto& x : rot) x = {eperm[x.edge], swap[x.edge] ? 3 - x.end : x.end};
    vertices[vperm[v]] = {"w" + std::to_string(vperm[v]), std::move(rot)};
  }
  std::vector<Edge> edges(m);
  for (int e = 0; e < m; ++e)
    edges[eperm[e]] = {"x" + std::to_string(eperm[e]), sign[e] > 0 ? Sign::Plus : Sign::Minus};
  return RibbonGraph(std::move(vertices), std::move(edges));
}

/// Contraction of one non-loop edge by splicing rotations: make the edge
/// untwisted by flipping its second vertex if needed, then replace end 1 of
/// the edge with the rest of the other vertex's rotation, read from just
/// after end 2.
inline RibbonGraph splice_contract(const RibbonGraph& g, int e) {
  const int u = g.vertex_of({e, 1});
  const int v = g.vertex_of({e, 2});
  std::vector<Vertex> vertices = g.vertices();
  std::vector<Edge> edges = g.edges();
  if (edges[e].sign == Sign::Minus) {
    std::reverse(vertices[v].rotation.begin(), vertices[v].rotation.end());
    for (const auto& x : vertices[v].rotation) edges[x.edge].sign = toggled(edges[x.edge].sign);
  }
  const auto& vrot = vertices[v].rotation;
  const auto at = std::find(vrot.begin(), vrot.end(), EdgeEnd{e, 2}) - vrot.begin();
  std::vector<EdgeEnd> tail;
  for (std::size_t i = 1; i < vrot.size(); ++i) tail.push_back(vrot[(at + i) % vrot.size()]);
  std::vector<EdgeEnd> merged;
  for (const auto& x : vertices[u].rotation) {
    if (x == EdgeEnd{e, 1}) merged.insert(merged.end(), tail.begin(), tail.end());
    else merged.push_back(x);
  }
  vertices[u].rotation = std::move(merged);
  vertices.erase(vertices.begin() + v);
  // Drop edge e and renumber the rest.
  for (auto& vert : vertices)
    for (auto& x : vert.rotation)
      if (x.edge > e) --x.edge;
  edges.erase(edges.begin() + e);
  return RibbonGraph(std::move(vertices), std::move(edges));
}

}  // namespace oracle
