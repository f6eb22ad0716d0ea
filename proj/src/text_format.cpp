#include "ribbonlab/text_format.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace ribbonlab {

namespace {

bool is_name_char(char c) {
  return !(c == ' ' || c == '\t' || c == '\r' || c == ':' || c == '.' || c == '#');
}

class LineScanner {
 public:
  LineScanner(std::string_view line, int line_no) : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' || line_[pos_] == '\r'))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }

  std::string name(const char* what) {
    skip_space();
    const std::size_t begin = pos_;
    while (pos_ < line_.size() && is_name_char(line_[pos_])) ++pos_;
    if (pos_ == begin) fail(std::string("expected ") + what);
    return std::string(line_.substr(begin, pos_ - begin));
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= line_.size() || line_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  char peek_raw() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_no_, column(), message);
  }

 private:
  std::string_view line_;
  std::size_t pos_ = 0;
  int line_no_;
};

struct PendingEnd {
  std::string edge;
  int end;
  int line;
  int column;
};

}  // namespace

RibbonGraph parse_graph(std::string_view text) {
  std::vector<std::pair<std::string, std::vector<PendingEnd>>> vertex_lines;
  std::vector<Edge> edges;
  std::map<std::string, int> edge_ids;
  std::vector<std::pair<int, int>> edge_positions;  // line, column of each declaration
  std::set<std::string> vertex_names;

  int line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineScanner scan(line, line_no);
    if (scan.at_end()) continue;
    const int keyword_column = scan.column();
    const std::string keyword = scan.name("keyword");
    if (keyword == "vertex") {
      const int name_column = (scan.skip_space(), scan.column());
      std::string name = scan.name("vertex name");
      if (!vertex_names.insert(name).second)
        throw ParseError(line_no, name_column, "duplicate vertex '" + name + "'");
      scan.expect(':');
      std::vector<PendingEnd> ends;
      while (!scan.at_end()) {
        const int col = scan.column();
        std::string edge = scan.name("edge end");
        if (scan.peek_raw() != '.') scan.fail("expected '.' followed by 1 or 2");
        scan.advance();
        const char digit = scan.peek_raw();
        if (digit != '1' && digit != '2') scan.fail("edge end must be 1 or 2");
        scan.advance();
        if (scan.peek_raw() != '\0' && scan.peek_raw() != ' ' && scan.peek_raw() != '\t' &&
            scan.peek_raw() != '\r')
          scan.fail("unexpected character after edge end");
        ends.push_back({std::move(edge), digit - '0', line_no, col});
      }
      vertex_lines.emplace_back(std::move(name), std::move(ends));
    } else if (keyword == "edge") {
      const int name_column = (scan.skip_space(), scan.column());
      std::string name = scan.name("edge name");
      if (edge_ids.count(name)) throw ParseError(line_no, name_column, "duplicate edge '" + name + "'");
      scan.expect(':');
      scan.skip_space();
      const char s = scan.peek_raw();
      if (s != '+' && s != '-') scan.fail("expected '+' or '-'");
      scan.advance();
      if (!scan.at_end()) scan.fail("unexpected trailing input");
      edge_ids.emplace(name, static_cast<int>(edges.size()));
      edge_positions.emplace_back(line_no, name_column);
      edges.push_back({std::move(name), s == '+' ? Sign::Plus : Sign::Minus});
    } else {
      throw ParseError(line_no, keyword_column, "unknown keyword '" + keyword + "'");
    }
  }

  std::vector<Vertex> vertices;
  std::vector<bool> placed(2 * edges.size(), false);
  for (auto& [name, ends] : vertex_lines) {
    Vertex v{name, {}};
    for (const auto& p : ends) {
      const auto it = edge_ids.find(p.edge);
      if (it == edge_ids.end()) throw ParseError(p.line, p.column, "undeclared edge '" + p.edge + "'");
      const EdgeEnd h{it->second, p.end};
      if (placed[h.dart()])
        throw ParseError(p.line, p.column, "edge end " + p.edge + "." + std::to_string(p.end) + " placed twice");
      placed[h.dart()] = true;
      v.rotation.push_back(h);
    }
    vertices.push_back(std::move(v));
  }
  for (std::size_t d = 0; d < placed.size(); ++d) {
    if (placed[d]) continue;
    const auto [line, column] = edge_positions[d / 2];
    throw ParseError(line, column,
                     "edge end " + edges[d / 2].name + "." + std::to_string(d % 2 + 1) + " is in no rotation");
  }
  RibbonGraph g(std::move(vertices), std::move(edges));
  require_valid(g);
  return g;
}

RibbonGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const RibbonGraph& g) {
  std::string out;
  for (const auto& v : g.vertices()) {
    out += "vertex " + v.name + ":";
    for (const auto& h : v.rotation) out += " " + g.edge(h.edge).name + "." + std::to_string(h.end);
    out += "\n";
  }
  for (const auto& e : g.edges()) out += "edge " + e.name + ": " + (e.sign == Sign::Plus ? "+" : "-") + "\n";
  return out;
}

}  // namespace ribbonlab
