#include "ribbonlab/workbench.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ribbonlab/algorithms.hpp"
#include "ribbonlab/arrow_presentation.hpp"
#include "ribbonlab/medial.hpp"
#include "ribbonlab/operators.hpp"
#include "ribbonlab/predicates.hpp"
#include "ribbonlab/text_format.hpp"

namespace ribbonlab {

namespace {

constexpr int kExhaustiveSubsetEdges = 3;
constexpr int kSampledSubsets = 12;

std::string names(const EdgeSet& s) {
  std::string out = "{";
  for (const auto& e : s) out += (out.size() > 1 ? "," : "") + e;
  return out + "}";
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  for (const auto& e : a)
    if (b.count(e)) out.insert(e);
  return out;
}

std::mt19937_64 rng_for(const RibbonGraph& g) {
  std::uint64_t seed = 1469598103934665603ull;
  for (int x : canonical_key(g)) seed = (seed ^ static_cast<std::uint64_t>(x + 7)) * 1099511628211ull;
  return std::mt19937_64(seed);
}

// Every subset for small graphs, a deterministic sample otherwise.
std::vector<EdgeSet> subsets_for(const RibbonGraph& g) {
  if (g.edge_count() <= kExhaustiveSubsetEdges) return all_edge_subsets(g);
  auto rng = rng_for(g);
  std::vector<EdgeSet> out{EdgeSet{}, g.all_edges()};
  std::uniform_int_distribution<std::uint32_t> pick(0, (1u << g.edge_count()) - 1);
  for (int i = 0; i < kSampledSubsets; ++i) {
    const std::uint32_t mask = pick(rng);
    EdgeSet s;
    for (int e = 0; e < g.edge_count(); ++e)
      if ((mask >> e) & 1u) s.insert(g.edge(e).name);
    out.push_back(std::move(s));
  }
  return out;
}

// Pairs of disjoint subsets (ternary labelling of edges).
std::vector<std::pair<EdgeSet, EdgeSet>> disjoint_pairs_for(const RibbonGraph& g) {
  const int m = g.edge_count();
  std::vector<std::vector<int>> labellings;
  if (m <= kExhaustiveSubsetEdges) {
    int total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::vector<int> lab(m);
      for (int e = 0, c = code; e < m; ++e, c /= 3) lab[e] = c % 3;
      labellings.push_back(std::move(lab));
    }
  } else {
    auto rng = rng_for(g);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < kSampledSubsets; ++i) {
      std::vector<int> lab(m);
      for (auto& x : lab) x = pick(rng);
      labellings.push_back(std::move(lab));
    }
  }
  std::vector<std::pair<EdgeSet, EdgeSet>> out;
  for (const auto& lab : labellings) {
    EdgeSet b, c;
    for (int e = 0; e < m; ++e) {
      if (lab[e] == 1) b.insert(g.edge(e).name);
      if (lab[e] == 2) c.insert(g.edge(e).name);
    }
    out.emplace_back(std::move(b), std::move(c));
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// --- individual properties -------------------------------------------------

std::string checkerboard_implies_eulerian(const RibbonGraph& g) {
  if (is_checkerboard_colourable(g) && !is_eulerian(g)) return "checkerboard colourable but not Eulerian";
  return {};
}

std::string bipartite_implies_even_face(const RibbonGraph& g) {
  if (is_bipartite(g) && !is_even_face(g)) return "bipartite but not even-face";
  return {};
}

std::string checkerboard_iff_dual_bipartite(const RibbonGraph& g) {
  const bool a = is_checkerboard_colourable(g);
  const bool b = is_bipartite(geometric_dual(g));
  if (a != b) return std::string("checkerboard=") + yes_no(a) + " dual bipartite=" + yes_no(b);
  return {};
}

std::string even_face_iff_dual_eulerian(const RibbonGraph& g) {
  const bool a = is_even_face(g);
  const bool b = is_eulerian(geometric_dual(g));
  if (a != b) return std::string("even-face=") + yes_no(a) + " dual Eulerian=" + yes_no(b);
  return {};
}

std::string face_counts(const RibbonGraph& g) {
  int sum = 0;
  for (int d : face_degrees(g)) sum += d;
  if (sum != 2 * g.edge_count()) return "face degrees sum to " + std::to_string(sum);
  const auto boundary = trace_boundary(g);
  int segments = 0;
  for (const auto& c : boundary.components) segments += static_cast<int>(c.size());
  if (segments != 4 * g.edge_count()) return "boundary covers " + std::to_string(segments) + " segments";
  for (int chi : euler_characteristic(g).per_component)
    if (chi > 2) return "component with Euler characteristic " + std::to_string(chi);
  return {};
}

std::string twisted_dual_endtoend(const RibbonGraph& g) {
  for (bool reverse : {false, true}) {
    TwistedDualCertificate cert;
    try {
      cert = checkerboard_twisted_dual(g, reverse);
    } catch (const InvariantFailure& e) {
      return e.what();
    }
    if (!is_valid_face_colouring(cert.result, cert.colouring)) return "certificate colouring is not proper";
    TwistWord word;
    for (const auto& e : g.edges()) {
      const bool a = cert.twisted.count(e.name) > 0;
      const bool d = cert.dualled.count(e.name) > 0;
      word[e.name] = a && d ? TwistElement::kDualTwist
                     : a    ? TwistElement::kTwist
                     : d    ? TwistElement::kDual
                            : TwistElement::kIdentity;
    }
    if (!are_isomorphic(apply_twist_word(g, word), cert.result))
      return "result is not the twisted dual given by A=" + names(cert.twisted) + " D=" + names(cert.dualled);
  }
  return {};
}

std::string partial_petrial_endtoend(const RibbonGraph& g) {
  for (Colour first : {Colour::kRed, Colour::kBlue}) {
    try {
      const auto cert = checkerboard_partial_petrial(g, first);
      if (!is_valid_face_colouring(cert.result, cert.colouring)) return "certificate colouring is not proper";
      if (!inconsistent_edges(cert.result, cert.vertex_colouring).empty())
        return "partial Petrial still has inconsistent edges";
    } catch (const InvariantFailure& e) {
      return e.what();
    }
  }
  return {};
}

std::string boundary_criterion_equivalence(const RibbonGraph& g) {
  for (const auto& a : subsets_for(g)) {
    const bool lhs = boundary_orientation_criterion(g, a);
    const bool rhs = is_checkerboard_colourable(partial_dual(g, a));
    if (lhs != rhs)
      return "A=" + names(a) + ": orientation criterion=" + yes_no(lhs) + " partial dual checkerboard=" + yes_no(rhs);
  }
  return {};
}

std::string petrial_orientable_dual_eulerian(const RibbonGraph& g) {
  if (is_orientable(petrial(g)) && !is_eulerian(geometric_dual(g))) return "Petrial orientable but dual not Eulerian";
  return {};
}

std::string partial_dual_checkerboard_minors(const RibbonGraph& g) {
  const RibbonGraph dual = geometric_dual(g);
  for (const auto& a : subsets_for(g)) {
    if (!is_checkerboard_colourable(partial_dual(g, a))) continue;
    const RibbonGraph x = delete_edges(g, a);
    const RibbonGraph y = delete_edges(dual, g.complement(a));
    if (!is_checkerboard_colourable(x) || !is_eulerian(x)) return "A=" + names(a) + ": G-A fails";
    if (!is_checkerboard_colourable(y) || !is_eulerian(y)) return "A=" + names(a) + ": G*-A^c fails";
  }
  return {};
}

std::string bipartite_partial_dual_minors(const RibbonGraph& g) {
  const RibbonGraph dual = geometric_dual(g);
  for (const auto& a : subsets_for(g)) {
    const EdgeSet ac = g.complement(a);
    const RibbonGraph pd = partial_dual(g, a);
    const RibbonGraph x = geometric_dual(delete_edges(g, ac));
    const RibbonGraph y = geometric_dual(delete_edges(dual, a));
    if (!are_isomorphic(x, delete_edges(pd, ac))) return "A=" + names(a) + ": (G-A^c)* differs from G^A-A^c";
    if (!are_isomorphic(y, delete_edges(pd, a))) return "A=" + names(a) + ": (G*-A)* differs from G^A-A";
    if (is_bipartite(pd) && (!is_bipartite(x) || !is_bipartite(y)))
      return "A=" + names(a) + ": G^A bipartite but a dual minor is not";
  }
  return {};
}

std::string minor_partial_dual_commute(const RibbonGraph& g) {
  const auto pairs = disjoint_pairs_for(g);
  for (const auto& a : subsets_for(g)) {
    const RibbonGraph pd = partial_dual(g, a);
    const EdgeSet ac = g.complement(a);
    for (const auto& [b, c] : pairs) {
      const EdgeSet b2 = set_union(set_intersection(b, ac), set_intersection(c, a));
      const EdgeSet c2 = set_union(set_intersection(c, ac), set_intersection(b, a));
      const RibbonGraph m = minor(g, b, c);
      const RibbonGraph lhs = partial_dual(m, set_intersection(a, m.all_edges()));
      const RibbonGraph rhs = minor(pd, b2, c2);
      if (!are_isomorphic(lhs, rhs))
        return "A=" + names(a) + " B=" + names(b) + " C=" + names(c) + ": (G-B/C)^A differs from G^A-B'/C'";
    }
  }
  return {};
}

std::string d_edges_eulerian(const RibbonGraph& g) {
  for (bool reverse : {false, true}) {
    const MedialGraph m = build_medial(g);
    const auto cls = classify_cd(m, straight_ahead_direction(m, reverse));
    const EdgeSet d = cls.d_edges(m.host());
    if (!is_eulerian(delete_edges(g, d))) return "G-D not Eulerian, D=" + names(d);
    if (!is_eulerian(delete_edges(geometric_dual(g), g.complement(d)))) return "G*-D^c not Eulerian, D=" + names(d);
  }
  return {};
}

std::string medial_smoothing(const RibbonGraph& g) {
  for (bool reverse : {false, true}) {
    const MedialGraph m = build_medial(g);
    const auto dir = straight_ahead_direction(m, reverse);
    if (!is_all_crossing(m, dir)) return "straight-ahead direction is not all-crossing";
    const auto cls = classify_cd(m, dir);
    if (static_cast<int>(cls.type.size()) != g.edge_count()) return "classification not total";
    const auto curves = smooth(m, dir, cls);

    // signs: each c-edge side pair and each d-edge end pair must disagree
    std::vector<std::array<int, 2>> seen(g.edge_count(), {0, 0});
    std::vector<std::array<int, 2>> count(g.edge_count(), {0, 0});
    for (const auto& c : curves) {
      for (const auto& s : c.segments) {
        const int slot = s.kind == CrossingType::kC ? s.which : s.which - 1;
        seen[s.edge][slot] = s.positive ? 1 : -1;
        ++count[s.edge][slot];
      }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      if (count[e][0] != 1 || count[e][1] != 1) return "edge " + g.edge(e).name + " not crossed exactly twice";
      if (seen[e][0] == seen[e][1]) return "edge " + g.edge(e).name + " has equal signs on both segments";
    }

    // curves against the boundary of host - D, compared through the edge
    // line segments of kept edges
    const RibbonGraph& host = m.host();
    const EdgeSet d = cls.d_edges(host);
    const RibbonGraph rest = delete_edges(host, d);
    const auto boundary = trace_boundary(rest);
    if (static_cast<int>(curves.size()) != boundary.count())
      return "smoothing gives " + std::to_string(curves.size()) + " curves, host-D has " +
             std::to_string(boundary.count()) + " boundary components";
    std::map<std::pair<std::string, int>, int> curve_of, face_of;
    for (std::size_t i = 0; i < curves.size(); ++i)
      for (const auto& s : curves[i].segments)
        if (s.kind == CrossingType::kC) curve_of[{host.edge(s.edge).name, s.which}] = static_cast<int>(i);
    for (int e = 0; e < rest.edge_count(); ++e)
      for (Side side : {Side::L, Side::R})
        face_of[{rest.edge(e).name, static_cast<int>(side)}] = boundary.component({{e, 1}, side});
    std::map<int, int> forward, backward;
    for (const auto& [key, curve] : curve_of) {
      const int face = face_of.at(key);
      if (forward.count(curve) && forward[curve] != face) return "a curve spans two boundary components";
      if (backward.count(face) && backward[face] != curve) return "a boundary component spans two curves";
      forward[curve] = face;
      backward[face] = curve;
    }
  }
  return {};
}

std::string operator_algebra(const RibbonGraph& g) {
  for (const auto& a : subsets_for(g)) {
    if (!(partial_petrial(partial_petrial(g, a), a) == g)) return "tau(A)^2 != 1 for A=" + names(a);
    const RibbonGraph pd = partial_dual(g, a);
    if (!are_isomorphic(partial_dual(pd, a), g)) return "delta(A)^2 != 1 for A=" + names(a);
    const EdgeSet ac = g.complement(a);
    if (!are_isomorphic(partial_dual(pd, ac), geometric_dual(g)))
      return "delta(A) delta(A^c) != delta(E) for A=" + names(a);
    if (!are_isomorphic(partial_dual(partial_petrial(g, ac), a), partial_petrial(pd, ac)))
      return "delta(A) and tau(A^c) do not commute for A=" + names(a);
    if (!are_isomorphic(apply_steps(g, a, "tdtdtd"), g)) return "(delta tau)^3 != 1 for A=" + names(a);
  }
  for (const auto& [b, c] : disjoint_pairs_for(g)) {
    if (!are_isomorphic(partial_dual(g, set_union(b, c)), partial_dual(partial_dual(g, b), c)))
      return "delta(B u C) != delta(C) delta(B) for B=" + names(b) + " C=" + names(c);
    if (!are_isomorphic(delete_edges(contract(g, c), b), contract(delete_edges(g, b), c)))
      return "deletion and contraction do not commute for B=" + names(b) + " C=" + names(c);
  }
  return {};
}

std::string round_trips(const RibbonGraph& g) {
  if (!(from_arrow_presentation(to_arrow_presentation(g)) == g)) return "arrow presentation round trip";
  if (!(parse_graph(serialize_graph(g)) == g)) return "text round trip";
  const std::string canon = serialize_graph(canonical_form(g));
  if (serialize_graph(parse_graph(canon)) != canon) return "canonical text round trip is not bit-exact";
  if (!(petrial(petrial(g)) == g)) return "G^xx != G";
  if (!are_isomorphic(geometric_dual(geometric_dual(g)), g)) return "G** not isomorphic to G";
  if (!are_isomorphic(canonical_form(g), g)) return "canonical form not isomorphic";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const RibbonGraph f = flip_vertex(g, v);
    if (!(flip_vertex(f, v) == g)) return "flip is not an involution";
    if (!are_isomorphic(f, g)) return "flip changes isomorphism class";
    if (is_orientable(f) != is_orientable(g)) return "flip changes orientability";
  }
  return {};
}

std::vector<NamedProperty> make_registry() {
  const auto orientable = [](const RibbonGraph& g) { return is_orientable(g); };
  const auto eulerian = [](const RibbonGraph& g) { return is_eulerian(g); };
  return {
      {"checkerboard-implies-eulerian", "checkerboard colourable => Eulerian", checkerboard_implies_eulerian, {}},
      {"bipartite-implies-even-face", "bipartite => even-face", bipartite_implies_even_face, {}},
      {"checkerboard-iff-dual-bipartite", "checkerboard colourable <=> dual bipartite",
       checkerboard_iff_dual_bipartite, {}},
      {"even-face-iff-dual-eulerian", "even-face <=> dual Eulerian", even_face_iff_dual_eulerian, {}},
      {"face-counts", "face degrees sum to 2|E|, boundary partitions 4|E| segments, chi <= 2", face_counts, {}},
      {"theorem1-endtoend", "d-edge twisted dual of the orientable partial Petrial is checkerboard colourable",
       twisted_dual_endtoend, {}},
      {"theorem2-endtoend", "partial Petrial on inconsistent edges is checkerboard colourable",
       partial_petrial_endtoend, eulerian},
      {"boundary-orientation-criterion", "boundary sign criterion for G-A <=> G^A checkerboard colourable",
       boundary_criterion_equivalence, orientable},
      {"petrial-orientable-implies-dual-eulerian", "G^x orientable => G* Eulerian",
       petrial_orientable_dual_eulerian, {}},
      {"partial-dual-checkerboard-minors", "G^A checkerboard => G-A and G*-A^c checkerboard and Eulerian",
       partial_dual_checkerboard_minors, {}},
      {"bipartite-partial-dual-minors", "(G-A^c)* = G^A-A^c, (G*-A)* = G^A-A, bipartiteness passes down",
       bipartite_partial_dual_minors, {}},
      {"minor-partial-dual-commute", "(G-B/C)^A = G^A-B'/C'", minor_partial_dual_commute, {}},
      {"d-edges-eulerian", "G-D and G*-D^c Eulerian for medial d-edges D", d_edges_eulerian, orientable},
      {"medial-smoothing", "all-crossing walks, total c/d split, smoothing signs and curves", medial_smoothing,
       orientable},
      {"operator-algebra", "involutions, commutation and (delta tau)^3 = 1", operator_algebra, {}},
      {"round-trips", "arrow/text/canonical round trips, G**, G^xx, flips", round_trips, {}},
  };
}

}  // namespace

const std::vector<NamedProperty>& property_registry() {
  static const std::vector<NamedProperty> registry = make_registry();
  return registry;
}

const NamedProperty& find_property(const std::string& name) {
  for (const auto& p : property_registry())
    if (p.name == name) return p;
  throw Error("unknown property '" + name + "'");
}

PropertyReport run_property_suite(const std::vector<RibbonGraph>& universe, const UniverseParams& params,
                                  const NamedProperty& property, int workers) {
  const auto started = std::chrono::steady_clock::now();
  PropertyReport report;
  report.property = property.name;
  report.params = params;
  workers = std::max(1, workers);

  std::vector<std::size_t> checked(workers, 0);
  std::vector<std::vector<PropertyFailure>> failures(workers);
  const auto run = [&](int w) {
    for (std::size_t i = w; i < universe.size(); i += workers) {
      const RibbonGraph& g = universe[i];
      if (property.applies && !property.applies(g)) continue;
      ++checked[w];
      std::string detail;
      try {
        detail = property.check(g);
      } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
      }
      if (!detail.empty()) failures[w].push_back({i, serialize_graph(g), std::move(detail)});
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  for (int w = 0; w < workers; ++w) {
    report.checked += checked[w];
    report.failures.insert(report.failures.end(), failures[w].begin(), failures[w].end());
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const PropertyFailure& a, const PropertyFailure& b) { return a.index < b.index; });
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

PropertyReport run_property_suite(const UniverseParams& params, const std::string& property, int workers) {
  const NamedProperty& p = find_property(property);
  return run_property_suite(enumerate_graphs(params), params, p, workers);
}

std::string PropertyReport::to_json() const {
  nlohmann::ordered_json j;
  j["property"] = property;
  j["params"] = {{"max_edges", params.max_edges},       {"min_edges", params.min_edges},
                 {"max_vertices", params.max_vertices}, {"max_isolated", params.max_isolated},
                 {"connected_only", params.connected_only}, {"dedup", params.dedup}};
  j["checked"] = checked;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures)
    j["failures"].push_back({{"index", f.index}, {"graph", f.graph}, {"detail", f.detail}});
  j["elapsed-ms"] = std::round(elapsed_ms * 1000.0) / 1000.0;
  return j.dump(2);
}

std::string PropertyReport::to_text() const {
  std::ostringstream out;
  out << (passed() ? "PASS " : "FAIL ") << std::left << std::setw(42) << property << " checked "
      << std::right << std::setw(6) << checked << "  failures " << failures.size() << "  (" << std::fixed
      << std::setprecision(0) << elapsed_ms << " ms)\n";
  for (const auto& f : failures) {
    out << "  #" << f.index << ": " << f.detail << "\n";
    std::istringstream lines(f.graph);
    for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
  }
  return out.str();
}

std::optional<ConverseWitness> search_converse_counterexample(const std::vector<RibbonGraph>& universe) {
  for (const auto& g : universe) {
    const RibbonGraph dual = geometric_dual(g);
    for (const auto& a : all_edge_subsets(g)) {
      if (is_bipartite(partial_dual(g, a))) continue;
      if (!is_bipartite(geometric_dual(delete_edges(g, g.complement(a))))) continue;
      if (!is_bipartite(geometric_dual(delete_edges(dual, a)))) continue;
      return ConverseWitness{g, a};
    }
  }
  return std::nullopt;
}

bool verify_converse_witness(const ConverseWitness& w) {
  const RibbonGraph& g = w.graph;
  return !is_bipartite(partial_dual(g, w.subset)) &&
         is_bipartite(geometric_dual(delete_edges(g, g.complement(w.subset)))) &&
         is_bipartite(geometric_dual(delete_edges(geometric_dual(g), w.subset)));
}

}  // namespace ribbonlab
