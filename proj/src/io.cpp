#include "twhad/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "twhad/errors.hpp"

namespace twh::io {

namespace {

long long parse_ll(const std::string& tok) {
  try {
    size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw ParseError("trailing characters in '" + tok + "'");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'");
  }
}

int parse_int(const std::string& tok) { return (int)parse_ll(tok); }

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::string next_content_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!tokens(line).empty()) return line;
  }
  throw ParseError("unexpected end of input");
}

Rational parse_rational(const std::string& tok) {
  auto slash = tok.find('/');
  if (slash == std::string::npos) return Rational(parse_ll(tok));
  return Rational(parse_ll(tok.substr(0, slash)), parse_ll(tok.substr(slash + 1)));
}

}  // namespace

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph read_graph(std::istream& in) {
  auto head = tokens(next_content_line(in));
  if (head.size() != 2) throw ParseError("graph header must be 'n m'");
  int n = parse_int(head[0]), m = parse_int(head[1]);
  if (n < 0 || m < 0) throw ParseError("negative graph dimensions");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    auto tk = tokens(next_content_line(in));
    if (tk.size() != 2) throw ParseError("edge line must be 'u v'");
    int u = parse_int(tk[0]), v = parse_int(tk[1]);
    if (!(0 <= u && u < v && v < n))
      throw ParseError("edge " + tk[0] + " " + tk[1] + " violates 0 <= u < v < n");
    edges.push_back({u, v});
  }
  Graph g(n, edges);
  if (g.edge_count() != m) throw ParseError("duplicate edge in graph file");
  return g;
}

std::string write_decomposition(const Graph& g, const TreeDecomposition& td) {
  std::ostringstream out;
  out << "td " << td.bags.size() << " " << td.width() + 1 << " " << g.vertex_count()
      << "\n";
  for (size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (int v : td.bags[i]) out << " " << v;
    out << "\n";
  }
  for (auto [a, b] : td.tree.edges()) out << "t " << a + 1 << " " << b + 1 << "\n";
  return out.str();
}

TreeDecomposition read_decomposition(std::istream& in) {
  auto head = tokens(next_content_line(in));
  if (head.size() != 4 || head[0] != "td")
    throw ParseError("decomposition header must be 'td <bags> <width+1> <n>'");
  int bags = parse_int(head[1]);
  TreeDecomposition td;
  td.bags.resize(bags);
  std::vector<Edge> tree_edges;
  std::vector<char> seen(bags, 0);
  for (int i = 0; i < bags; ++i) {
    auto tk = tokens(next_content_line(in));
    if (tk.size() < 2 || tk[0] != "b") throw ParseError("expected a bag line");
    int id = parse_int(tk[1]);
    if (id < 1 || id > bags || seen[id - 1])
      throw ParseError("bad bag id " + tk[1]);
    seen[id - 1] = 1;
    for (size_t j = 2; j < tk.size(); ++j)
      td.bags[id - 1].push_back(parse_int(tk[j]));
  }
  for (int i = 0; i < bags - 1; ++i) {
    auto tk = tokens(next_content_line(in));
    if (tk.size() != 3 || tk[0] != "t") throw ParseError("expected a tree edge line");
    int a = parse_int(tk[1]), b = parse_int(tk[2]);
    if (a < 1 || b < 1 || a > bags || b > bags || a == b)
      throw ParseError("bad tree edge");
    tree_edges.push_back({std::min(a, b) - 1, std::max(a, b) - 1});
  }
  td.tree = Graph(bags, tree_edges);
  return td;
}

std::string write_model(const std::vector<std::vector<int>>& branch_sets) {
  std::ostringstream out;
  out << "model " << branch_sets.size() << "\n";
  for (size_t p = 0; p < branch_sets.size(); ++p) {
    out << "s " << p;
    for (int v : branch_sets[p]) out << " " << v;
    out << "\n";
  }
  return out.str();
}

std::vector<std::vector<int>> read_model(std::istream& in) {
  auto head = tokens(next_content_line(in));
  if (head.size() != 2 || head[0] != "model")
    throw ParseError("model header must be 'model <sets>'");
  int sets = parse_int(head[1]);
  std::vector<std::vector<int>> out(sets);
  std::vector<char> seen(sets, 0);
  for (int i = 0; i < sets; ++i) {
    auto tk = tokens(next_content_line(in));
    if (tk.size() < 2 || tk[0] != "s") throw ParseError("expected a branch-set line");
    int p = parse_int(tk[1]);
    if (p < 0 || p >= sets || seen[p]) throw ParseError("bad pattern vertex " + tk[1]);
    seen[p] = 1;
    for (size_t j = 2; j < tk.size(); ++j) out[p].push_back(parse_int(tk[j]));
  }
  return out;
}

std::string write_steps(const std::vector<VmStep>& steps) {
  std::ostringstream out;
  for (const auto& s : steps)
    out << (s.kind == VmStep::Kind::LocalComplement ? "lc " : "del ") << s.vertex
        << "\n";
  return out.str();
}

std::vector<VmStep> read_steps(std::istream& in) {
  std::vector<VmStep> out;
  std::string line;
  while (std::getline(in, line)) {
    auto tk = tokens(line);
    if (tk.empty()) continue;
    if (tk.size() != 2 || (tk[0] != "lc" && tk[0] != "del"))
      throw ParseError("step line must be 'lc <v>' or 'del <v>'");
    out.push_back(tk[0] == "lc" ? VmStep::lc(parse_int(tk[1]))
                                : VmStep::del(parse_int(tk[1])));
  }
  return out;
}

std::string write_drawing(const MarkedDrawing& d) {
  std::ostringstream out;
  out << write_graph(d.graph);
  for (const auto& c : d.crossings) {
    out << "x " << c.vertex;
    for (int r : c.rotation) out << " " << r;
    out << "\n";
  }
  return out.str();
}

MarkedDrawing read_drawing(std::istream& in) {
  MarkedDrawing d;
  d.graph = read_graph(in);
  std::string line;
  while (std::getline(in, line)) {
    auto tk = tokens(line);
    if (tk.empty()) continue;
    if (tk.size() != 6 || tk[0] != "x")
      throw ParseError("crossing line must be 'x <c> <c1> <c2> <c3> <c4>'");
    MarkedDrawing::Crossing c;
    c.vertex = parse_int(tk[1]);
    for (int i = 0; i < 4; ++i) c.rotation[i] = parse_int(tk[2 + i]);
    d.crossings.push_back(c);
  }
  validate_drawing(d);
  return d;
}

std::string write_chord_diagram(const ChordDiagram& cd) {
  // chord ids by first appearance around the circle, 1-based
  std::ostringstream out;
  std::map<int, int> id_of_endpoint;
  for (size_t i = 0; i < cd.chords.size(); ++i) {
    id_of_endpoint[cd.chords[i].first] = (int)i;
    id_of_endpoint[cd.chords[i].second] = (int)i;
  }
  std::map<int, int> printed;
  int next = 1;
  for (int pos = 0; pos < cd.order.size(); ++pos) {
    int chord = id_of_endpoint.at(cd.order.at(pos));
    if (!printed.count(chord)) printed[chord] = next++;
    out << (pos ? " " : "") << printed[chord];
  }
  out << "\n";
  return out.str();
}

ChordDiagram read_chord_diagram(std::istream& in) {
  auto tk = tokens(next_content_line(in));
  std::vector<int> ids;
  for (auto& t : tk) ids.push_back(parse_int(t));
  return chord_diagram_from_ids(ids);
}

std::string write_cyclic_order(const CyclicOrder& c) {
  std::ostringstream out;
  const auto& e = c.elements();
  for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
  out << "\n";
  return out.str();
}

CyclicOrder read_cyclic_order(std::istream& in) {
  auto tk = tokens(next_content_line(in));
  std::vector<int> labels;
  for (auto& t : tk) labels.push_back(parse_int(t));
  return CyclicOrder(labels);
}

std::string write_string_diagram(const StringDiagram& d) {
  std::ostringstream out;
  for (const auto& s : d.strings) {
    out << "string " << s.id;
    for (const auto& p : s.points) out << " " << p.x.str() << " " << p.y.str();
    out << "\n";
  }
  return out.str();
}

StringDiagram read_string_diagram(std::istream& in) {
  StringDiagram d;
  std::string line;
  while (std::getline(in, line)) {
    auto tk = tokens(line);
    if (tk.empty()) continue;
    if (tk.size() < 6 || tk[0] != "string" || tk.size() % 2 != 0)
      throw ParseError(
          "string line must be 'string <id>' followed by x y rational pairs");
    StringDiagram::String s;
    s.id = parse_int(tk[1]);
    for (size_t i = 2; i < tk.size(); i += 2)
      s.points.push_back({parse_rational(tk[i]), parse_rational(tk[i + 1])});
    d.strings.push_back(s);
  }
  validate_string_diagram(d);
  return d;
}

std::string write_ordered_graph(const OrderedGraph& og) {
  std::ostringstream out;
  out << write_graph(og.graph);
  out << "order";
  for (int v : og.by_rank) out << " " << v;
  out << "\n";
  return out.str();
}

OrderedGraph read_ordered_graph(std::istream& in) {
  OrderedGraph og;
  og.graph = read_graph(in);
  auto tk = tokens(next_content_line(in));
  if (tk.empty() || tk[0] != "order") throw ParseError("expected an order line");
  for (size_t i = 1; i < tk.size(); ++i) og.by_rank.push_back(parse_int(tk[i]));
  validate_ordered_graph(og);
  return og;
}

std::string write_matrix(const Gf2Matrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) out << (m.get(i, j) ? '1' : '0');
    out << "\n";
  }
  return out.str();
}

Gf2Matrix read_matrix(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto tk = tokens(line);
    if (tk.empty()) continue;
    if (tk.size() != 1) throw ParseError("matrix rows must be single tokens");
    lines.push_back(tk[0]);
  }
  Gf2Matrix m;
  m.n = (int)lines.size();
  if (m.n > 64) throw ParseError("matrices capped at 64 rows");
  m.rows.assign(m.n, 0);
  for (int i = 0; i < m.n; ++i) {
    if ((int)lines[i].size() != m.n)
      throw ParseError("matrix row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < m.n; ++j) {
      if (lines[i][j] == '1')
        m.set(i, j, true);
      else if (lines[i][j] != '0')
        throw ParseError("matrix entries must be '0' or '1'");
    }
  }
  return m;
}

std::string write_separation(const Separation& s) {
  std::ostringstream out;
  out << "sep " << s.a.size() + s.b.size() << "\n";
  out << "a";
  for (int v : s.a) out << " " << v;
  out << "\nb";
  for (int v : s.b) out << " " << v;
  out << "\n";
  return out.str();
}

Separation read_separation(std::istream& in) {
  auto head = tokens(next_content_line(in));
  if (head.size() != 2 || head[0] != "sep")
    throw ParseError("separation header must be 'sep <total>'");
  Separation s;
  for (auto* side : {&s.a, &s.b}) {
    auto tk = tokens(next_content_line(in));
    if (tk.empty() || (tk[0] != "a" && tk[0] != "b"))
      throw ParseError("expected separation side line");
    for (size_t i = 1; i < tk.size(); ++i) side->push_back(parse_int(tk[i]));
  }
  return s;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace twh::io
