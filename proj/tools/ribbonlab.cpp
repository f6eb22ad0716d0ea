// ribbonlab: command-line front end for the ribbon-graph library.
//
// Exit codes: 0 success / property holds, 1 property failure or internal
// invariant failure, 2 usage, input-format or precondition error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ribbonlab/algorithms.hpp"
#include "ribbonlab/medial.hpp"
#include "ribbonlab/operators.hpp"
#include "ribbonlab/predicates.hpp"
#include "ribbonlab/text_format.hpp"
#include "ribbonlab/workbench.hpp"

using namespace ribbonlab;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

EdgeSet parse_edge_list(const std::string& text) {
  EdgeSet out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.insert(item);
  return out;
}

std::string format_set(const EdgeSet& s) {
  std::string out = "{";
  for (const auto& e : s) out += (out.size() > 1 ? ", " : "") + e;
  return out + "}";
}

std::string format_colouring(const FaceColouring& c) {
  std::string out;
  for (std::size_t i = 0; i < c.colours.size(); ++i)
    out += (i ? " " : "") + std::to_string(i) + ":" + to_string(c.colours[i]);
  return out;
}

void print_row(const std::string& label, const std::string& value) {
  std::cout << std::left << std::setw(22) << label << value << "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

int cmd_check(const std::string& file) {
  const RibbonGraph g = read_graph_file(file);
  const auto chi = euler_characteristic(g);
  std::string degrees = "{";
  for (int d : face_degrees(g)) degrees += (degrees.size() > 1 ? ", " : "") + std::to_string(d);
  degrees += "}";
  print_row("vertices", std::to_string(g.vertex_count()));
  print_row("edges", std::to_string(g.edge_count()));
  print_row("faces", std::to_string(trace_boundary(g).count()));
  print_row("face degrees", degrees);
  print_row("euler characteristic", std::to_string(chi.total));
  print_row("components", std::to_string(chi.per_component.size()));
  print_row("orientable", yes_no(is_orientable(g)));
  print_row("eulerian", yes_no(is_eulerian(g)));
  print_row("bipartite", yes_no(is_bipartite(g)));
  print_row("even-face", yes_no(is_even_face(g)));
  print_row("checkerboard", yes_no(is_checkerboard_colourable(g)));
  return kOk;
}

struct OpOptions {
  std::string file;
  std::string word;
  bool dual = false;
  bool petrial = false;
  std::string pdual, ppetrial, del, con;
  bool has_pdual = false, has_ppetrial = false, has_del = false, has_con = false;
  std::string output;
};

int cmd_op(const OpOptions& o) {
  const RibbonGraph g = read_graph_file(o.file);
  const int chosen = !o.word.empty() + o.dual + o.petrial + o.has_pdual + o.has_ppetrial + o.has_del + o.has_con;
  if (chosen != 1) {
    std::cerr << "op: choose exactly one of --word, --dual, --petrial, --pdual, --ppetrial, --delete, --contract\n";
    return kUsage;
  }
  RibbonGraph out;
  if (!o.word.empty()) out = apply_twist_word(g, parse_twist_word(o.word));
  else if (o.dual) out = geometric_dual(g);
  else if (o.petrial) out = petrial(g);
  else if (o.has_pdual) out = partial_dual(g, parse_edge_list(o.pdual));
  else if (o.has_ppetrial) out = partial_petrial(g, parse_edge_list(o.ppetrial));
  else if (o.has_del) out = delete_edges(g, parse_edge_list(o.del));
  else out = contract(g, parse_edge_list(o.con));
  write_output(o.output, serialize_graph(out));
  return kOk;
}

int cmd_medial(const std::string& file, bool dot, bool reverse) {
  const RibbonGraph g = read_graph_file(file);
  const MedialGraph m = build_medial(g);
  const auto dir = straight_ahead_direction(m, reverse);
  const auto cls = classify_cd(m, dir);
  if (dot) {
    std::cout << medial_to_dot(m, dir, cls);
    return kOk;
  }
  print_row("medial vertices", std::to_string(m.vertex_count()));
  print_row("medial edges", std::to_string(m.edges().size()));
  print_row("free loops", std::to_string(m.free_loops().size()));
  print_row("all-crossing", yes_no(is_all_crossing(m, dir)));
  std::string types;
  for (int e = 0; e < m.vertex_count(); ++e)
    types += (e ? " " : "") + m.host().edge(e).name + ":" + (cls.type[e] == CrossingType::kD ? "d" : "c");
  print_row("c/d", types);
  print_row("d-edges", format_set(cls.d_edges(m.host())));
  print_row("smoothed curves", std::to_string(smooth(m, dir, cls).size()));
  return kOk;
}

int cmd_theorem1(const std::string& file, bool reverse) {
  const RibbonGraph g = read_graph_file(file);
  const auto cert = checkerboard_twisted_dual(g, reverse);
  std::string types;
  for (int e = 0; e < cert.orientable_host.edge_count(); ++e)
    types += (e ? " " : "") + cert.orientable_host.edge(e).name + ":" +
             (cert.classification.type[e] == CrossingType::kD ? "d" : "c");
  print_row("A (half-twisted)", format_set(cert.twisted));
  print_row("c/d", types);
  print_row("D (dualled)", format_set(cert.dualled));
  print_row("faces", std::to_string(trace_boundary(cert.result).count()));
  print_row("face colouring", format_colouring(cert.colouring));
  std::cout << "result:\n" << serialize_graph(cert.result);
  return kOk;
}

int cmd_theorem2(const std::string& file, bool blue_first) {
  const RibbonGraph g = read_graph_file(file);
  const RibbonGraph before = g;
  const auto cert = checkerboard_partial_petrial(g, blue_first ? Colour::kBlue : Colour::kRed);
  print_row("eulerian", yes_no(is_eulerian(before)));
  print_row("checkerboard before", yes_no(is_checkerboard_colourable(before)));
  print_row("I (inconsistent)", format_set(cert.twisted));
  print_row("checkerboard after", yes_no(is_checkerboard_colourable(cert.result)));
  print_row("face colouring", format_colouring(cert.colouring));
  std::cout << "result:\n" << serialize_graph(cert.result);
  return kOk;
}

struct UniverseOptions {
  UniverseParams params;
  bool labelled = false;

  void add_to(CLI::App* app) {
    app->add_option("--max-edges", params.max_edges, "largest edge count")->capture_default_str();
    app->add_option("--min-edges", params.min_edges, "smallest edge count")->capture_default_str();
    app->add_option("--max-vertices", params.max_vertices, "vertex bound (0 = none)")->capture_default_str();
    app->add_option("--max-isolated", params.max_isolated, "extra isolated vertices per class")
        ->capture_default_str();
    app->add_flag("--connected", params.connected_only, "connected graphs only");
    app->add_flag("--labelled", labelled, "every labelled rotation system instead of one per class");
  }
  UniverseParams resolved() const {
    UniverseParams p = params;
    p.dedup = !labelled;
    return p;
  }
};

int cmd_enumerate(const UniverseOptions& u, bool count_only) {
  const auto universe = enumerate_graphs(u.resolved());
  if (count_only) {
    std::map<int, std::size_t> by_edges;
    for (const auto& g : universe) ++by_edges[g.edge_count()];
    for (const auto& [k, n] : by_edges) std::cout << k << " edges: " << n << "\n";
    std::cout << "total: " << universe.size() << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (i) std::cout << "\n";
    std::cout << "# graph " << i << "\n" << serialize_graph(universe[i]);
  }
  return kOk;
}

int cmd_verify(const std::string& which, const UniverseOptions& u, bool json, int workers) {
  const UniverseParams params = u.resolved();
  std::vector<const NamedProperty*> selected;
  if (which == "all") {
    for (const auto& p : property_registry()) selected.push_back(&p);
  } else {
    selected.push_back(&find_property(which));
  }
  const auto universe = enumerate_graphs(params);
  bool ok = true;
  std::vector<std::string> reports;
  for (const auto* p : selected) {
    const auto report = run_property_suite(universe, params, *p, workers);
    ok = ok && report.passed();
    if (json) reports.push_back(report.to_json());
    else std::cout << report.to_text() << std::flush;
  }
  if (json) {
    std::cout << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) std::cout << reports[i] << (i + 1 < reports.size() ? ",\n" : "\n");
    std::cout << "]\n";
  } else {
    std::cout << (ok ? "all properties hold" : "property failures found") << " on " << universe.size()
              << " graphs\n";
  }
  return ok ? kOk : kFailure;
}

int cmd_iso(const std::string& a, const std::string& b) {
  const bool iso = are_isomorphic(read_graph_file(a), read_graph_file(b));
  std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return iso ? kOk : kFailure;
}

int cmd_canon(const std::string& file) {
  std::cout << serialize_graph(canonical_form(read_graph_file(file)));
  return kOk;
}

int cmd_search_converse(const UniverseOptions& u, const std::string& output) {
  const auto universe = enumerate_graphs(u.resolved());
  const auto witness = search_converse_counterexample(universe);
  if (!witness) {
    std::cout << "no witness among " << universe.size() << " graphs\n";
    return kOk;
  }
  const bool verified = verify_converse_witness(*witness);
  std::cout << "witness A = " << format_set(witness->subset) << (verified ? " (re-verified)" : " (FAILED re-verification)")
            << "\n";
  write_output(output, serialize_graph(witness->graph));
  return verified ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ribbonlab: twisted duals, medial graphs and checkerboard colourings of ribbon graphs"};
  app.require_subcommand(1);

  std::string file, file2, property = "all", output;
  bool dot = false, reverse = false, blue_first = false, json = false, count_only = false;
  int workers = 1;
  OpOptions op;
  UniverseOptions universe;

  auto* check = app.add_subcommand("check", "print the predicate table for a graph");
  check->add_option("file", file)->required();

  auto* opcmd = app.add_subcommand("op", "apply a twisted-duality operation");
  opcmd->add_option("file", op.file)->required();
  opcmd->add_option("--word", op.word, "per-edge twist word, e.g. e1:dt,e2:1,e3:d");
  opcmd->add_flag("--dual", op.dual, "geometric dual");
  opcmd->add_flag("--petrial", op.petrial, "Petrial");
  auto* pdual = opcmd->add_option("--pdual", op.pdual, "partial dual on a comma-separated edge set");
  auto* ppet = opcmd->add_option("--ppetrial", op.ppetrial, "partial Petrial on an edge set");
  auto* del = opcmd->add_option("--delete", op.del, "delete an edge set");
  auto* con = opcmd->add_option("--contract", op.con, "contract an edge set");
  opcmd->add_option("-o,--output", op.output, "output file (default stdout)");

  auto* medial = app.add_subcommand("medial", "medial graph with straight-ahead direction and c/d labels");
  medial->add_option("file", file)->required();
  medial->add_flag("--dot", dot, "emit DOT");
  medial->add_flag("--reverse-walks", reverse, "direct every straight-ahead walk the other way");

  auto* th1 = app.add_subcommand("theorem1", "checkerboard colourable twisted dual with certificate");
  th1->add_option("file", file)->required();
  th1->add_flag("--reverse-walks", reverse, "direct every straight-ahead walk the other way");

  auto* th2 = app.add_subcommand("theorem2", "checkerboard colourable partial Petrial of an Eulerian graph");
  th2->add_option("file", file)->required();
  th2->add_flag("--blue-first", blue_first, "start every vertex colouring with blue");

  auto* enumerate = app.add_subcommand("enumerate", "list small ribbon graphs");
  universe.add_to(enumerate);
  enumerate->add_flag("--count", count_only, "print counts per edge number only");

  auto* verify = app.add_subcommand("verify", "run property suites over an enumerated universe");
  verify->add_option("property", property, "property name or 'all'")->capture_default_str();
  universe.add_to(verify);
  verify->add_flag("--json", json, "JSON report");
  verify->add_option("--workers", workers, "worker threads")->capture_default_str();

  auto* list = app.add_subcommand("properties", "list property names");

  auto* iso = app.add_subcommand("iso", "test two graphs for isomorphism");
  iso->add_option("first", file)->required();
  iso->add_option("second", file2)->required();

  auto* canon = app.add_subcommand("canon", "canonical form of a graph");
  canon->add_option("file", file)->required();

  auto* converse = app.add_subcommand("search-converse",
                                      "find G, A with (G-A^c)* and (G*-A)* bipartite but G^A not");
  universe.add_to(converse);
  converse->add_option("-o,--output", output, "write the witness graph here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  op.has_pdual = pdual->count() > 0;
  op.has_ppetrial = ppet->count() > 0;
  op.has_del = del->count() > 0;
  op.has_con = con->count() > 0;

  try {
    if (check->parsed()) return cmd_check(file);
    if (opcmd->parsed()) return cmd_op(op);
    if (medial->parsed()) return cmd_medial(file, dot, reverse);
    if (th1->parsed()) return cmd_theorem1(file, reverse);
    if (th2->parsed()) return cmd_theorem2(file, blue_first);
    if (enumerate->parsed()) return cmd_enumerate(universe, count_only);
    if (verify->parsed()) return cmd_verify(property, universe, json, workers);
    if (list->parsed()) {
      for (const auto& p : property_registry()) std::cout << std::left << std::setw(42) << p.name << p.description << "\n";
      return kOk;
    }
    if (iso->parsed()) return cmd_iso(file, file2);
    if (canon->parsed()) return cmd_canon(file);
    if (converse->parsed()) return cmd_search_converse(universe, output);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantFailure& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return kFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
