#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ribbonlab/ribbon_graph.hpp"

namespace ribbonlab {

inline constexpr int kMaxEnumeratedEdges = 6;
inline constexpr int kMaxLabelledEdges = 4;

struct UniverseParams {
  int max_edges = 3;
  int min_edges = 0;
  int max_vertices = 0;  // 0 = no bound
  int max_isolated = 1;  // extra isolated vertices added to each class
  bool connected_only = false;
  bool dedup = true;
};

/// Every ribbon graph within the bounds. With dedup, exactly one
/// representative (canonical form) per isomorphism class, built by adding
/// one edge at a time; without dedup, every labelled signed rotation system
/// on edges e0.. (only up to kMaxLabelledEdges edges). Order is
/// deterministic: by edge count, then by canonical key / generation order.
/// Throws TooLargeError above the caps.
std::vector<RibbonGraph> enumerate_graphs(const UniverseParams& params);

struct PropertyFailure {
  std::size_t index = 0;  // position in the universe
  std::string graph;      // serialized witness
  std::string detail;
};

struct PropertyReport {
  std::string property;
  UniverseParams params;
  std::size_t checked = 0;
  std::vector<PropertyFailure> failures;
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty(); }
  std::string to_json() const;
  std::string to_text() const;
};

/// Returns an empty string when the property holds for the graph, else a
/// description of the failure. Subset-quantified properties enumerate their
/// subsets internally.
using GraphProperty = std::function<std::string(const RibbonGraph&)>;

struct NamedProperty {
  std::string name;
  std::string description;
  GraphProperty check;
  /// Restrict to graphs satisfying this (e.g. Eulerian); null = all.
  std::function<bool(const RibbonGraph&)> applies;
};

const std::vector<NamedProperty>& property_registry();

/// Throws Error for an unknown name.
const NamedProperty& find_property(const std::string& name);

/// Evaluates the property over every applicable graph. The report is the
/// same for any worker count.
PropertyReport run_property_suite(const std::vector<RibbonGraph>& universe, const UniverseParams& params,
                                  const NamedProperty& property, int workers = 1);

PropertyReport run_property_suite(const UniverseParams& params, const std::string& property, int workers = 1);

/// (G, A) where (G - A^c)* and (G* - A)* are bipartite but G^A is not.
struct ConverseWitness {
  RibbonGraph graph;
  EdgeSet subset;
};

/// First witness in universe order (subsets by increasing bitmask), or
/// nullopt if none exists in the universe.
std::optional<ConverseWitness> search_converse_counterexample(const std::vector<RibbonGraph>& universe);

/// Re-evaluates the three predicates directly.
bool verify_converse_witness(const ConverseWitness& w);

/// All subsets of the edge set, by increasing bitmask over edge indices.
std::vector<EdgeSet> all_edge_subsets(const RibbonGraph& g);

}  // namespace ribbonlab
