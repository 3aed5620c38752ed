#include "radial/io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace radial::io {

namespace {

class Reader {
 public:
  Reader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  // Next non-blank, non-comment line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      if (line.back() == '\r') line.pop_back();
      return true;
    }
    return false;
  }

  std::string expect(const std::string& what) {
    std::string line;
    if (!next(line)) fail("unexpected end of input, expected " + what);
    return line;
  }

  [[noreturn]] void fail(const std::string& rule) const {
    throw InputError(source_ + ":" + std::to_string(line_no_) + ": " + rule);
  }

  std::int64_t integer(std::istringstream& ss, const std::string& what) const {
    std::int64_t x;
    if (!(ss >> x)) fail("expected integer " + what);
    return x;
  }

  void word(std::istringstream& ss, const std::string& w) const {
    std::string got;
    if (!(ss >> got) || got != w) fail("expected '" + w + "'");
  }

  void end(std::istringstream& ss) const {
    std::string extra;
    if (ss >> extra) fail("unexpected trailing token '" + extra + "'");
  }

  int line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::string source_;
  int line_no_ = 0;
};

int as_int(const Reader& rd, std::int64_t x, const std::string& what) {
  if (x < 0 || x > std::numeric_limits<int>::max()) rd.fail(what + " out of range");
  return static_cast<int>(x);
}

Vertex as_vertex(const Reader& rd, std::int64_t x, int n, const std::string& what) {
  if (x < 0 || x >= n) rd.fail(what + " " + std::to_string(x) + " is not a vertex (n = " + std::to_string(n) + ")");
  return static_cast<Vertex>(x);
}

Graph parse_graph(Reader& rd, const std::string& header) {
  std::istringstream hs(header);
  const int n = as_int(rd, rd.integer(hs, "vertex count"), "vertex count");
  const int m = as_int(rd, rd.integer(hs, "edge count"), "edge count");
  rd.end(hs);
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    std::istringstream es(rd.expect("edge " + std::to_string(i)));
    Vertex u = as_vertex(rd, rd.integer(es, "edge endpoint"), n, "edge endpoint");
    Vertex v = as_vertex(rd, rd.integer(es, "edge endpoint"), n, "edge endpoint");
    rd.end(es);
    if (u == v) rd.fail("self-loop at " + std::to_string(u));
    if (g.adjacent(u, v)) rd.fail("repeated edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(u, v);
  }
  return g;
}

void write_vertices(std::ostream& out, const std::vector<Vertex>& vs) {
  for (Vertex v : vs) out << ' ' << v;
}

GraphDecomposition parse_decomposition(Reader& rd) {
  GraphDecomposition dec;
  dec.decomposition_graph = parse_graph(rd, rd.expect("decomposition graph header"));
  const int nodes = dec.decomposition_graph.vertex_count();
  for (int h = 0; h < nodes; ++h) {
    std::string line = rd.expect("bag " + std::to_string(h));
    auto colon = line.find(':');
    if (colon == std::string::npos) rd.fail("bag line needs 'bag h:'");
    std::istringstream head(line.substr(0, colon));
    rd.word(head, "bag");
    if (rd.integer(head, "bag index") != h) rd.fail("bags must be listed in node order, expected bag " + std::to_string(h));
    rd.end(head);
    std::istringstream body(line.substr(colon + 1));
    VertexSet bag;
    std::int64_t v;
    while (body >> v) {
      if (v < 0 || v > std::numeric_limits<int>::max()) rd.fail("bag vertex out of range");
      bag.push_back(static_cast<Vertex>(v));
    }
    if (!body.eof()) rd.fail("bag entries must be integers");
    const std::size_t size = bag.size();
    bag = make_set(std::move(bag));
    if (bag.size() != size) rd.fail("bag " + std::to_string(h) + " repeats a vertex");
    dec.bags.push_back(std::move(bag));
  }
  return dec;
}

SubdivisionWitness parse_witness(Reader& rd, std::istringstream& hs) {
  SubdivisionWitness w;
  std::string name;
  if (!(hs >> name)) rd.fail("witness header needs a pattern");
  auto p = parse_pattern(name);
  if (!p) rd.fail("unknown pattern '" + name + "'");
  w.pattern = *p;
  w.k = rd.integer(hs, "k");
  w.c = rd.integer(hs, "c");
  rd.end(hs);
  const Graph pg = pattern_graph(w.pattern);
  for (int i = 0; i < pg.vertex_count(); ++i) {
    std::istringstream bs(rd.expect("branch " + std::to_string(i)));
    rd.word(bs, "branch");
    if (rd.integer(bs, "branch index") != i) rd.fail("branch lines must be in pattern order, expected " + std::to_string(i));
    std::int64_t v = rd.integer(bs, "branch vertex");
    if (v < 0 || v > std::numeric_limits<int>::max()) rd.fail("branch vertex out of range");
    rd.end(bs);
    w.branch_vertices.push_back(static_cast<Vertex>(v));
  }
  for (auto [a, b] : pg.edges()) {
    std::string line = rd.expect("path " + std::to_string(a) + " " + std::to_string(b));
    auto colon = line.find(':');
    if (colon == std::string::npos) rd.fail("path line needs 'path i j:'");
    std::istringstream head(line.substr(0, colon));
    rd.word(head, "path");
    if (rd.integer(head, "path end") != a || rd.integer(head, "path end") != b) {
      rd.fail("paths must follow pattern edge order, expected path " + std::to_string(a) + " " + std::to_string(b));
    }
    rd.end(head);
    std::istringstream body(line.substr(colon + 1));
    Path path;
    std::int64_t v;
    while (body >> v) {
      if (v < 0 || v > std::numeric_limits<int>::max()) rd.fail("path vertex out of range");
      path.vertices.push_back(static_cast<Vertex>(v));
    }
    if (!body.eof()) rd.fail("path entries must be integers");
    if (path.vertices.empty()) rd.fail("empty path");
    w.branch_paths.push_back(std::move(path));
  }
  return w;
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& source) {
  Reader rd(in, source);
  Graph g = parse_graph(rd, rd.expect("graph header 'n m'"));
  std::string extra;
  if (rd.next(extra)) rd.fail("unexpected content after the last edge");
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

GraphDecomposition read_decomposition(std::istream& in, const std::string& source) {
  auto cert = read_certificate(in, source);
  if (auto* d = std::get_if<GraphDecomposition>(&cert)) return std::move(*d);
  throw InputError(source + ":1: expected a decomposition, found a witness");
}

void write_decomposition(std::ostream& out, const GraphDecomposition& dec) {
  out << "decomposition\n";
  write_graph(out, dec.decomposition_graph);
  for (std::size_t h = 0; h < dec.bags.size(); ++h) {
    out << "bag " << h << ':';
    write_vertices(out, dec.bags[h]);
    out << '\n';
  }
}

SubdivisionWitness read_witness(std::istream& in, const std::string& source) {
  auto cert = read_certificate(in, source);
  if (auto* w = std::get_if<SubdivisionWitness>(&cert)) return std::move(*w);
  throw InputError(source + ":1: expected a witness, found a decomposition");
}

void write_witness(std::ostream& out, const SubdivisionWitness& w) {
  out << "witness " << pattern_name(w.pattern) << ' ' << w.k << ' ' << w.c << '\n';
  for (std::size_t i = 0; i < w.branch_vertices.size(); ++i) out << "branch " << i << ' ' << w.branch_vertices[i] << '\n';
  const auto edges = pattern_graph(w.pattern).edges();
  for (std::size_t i = 0; i < edges.size() && i < w.branch_paths.size(); ++i) {
    out << "path " << edges[i].first << ' ' << edges[i].second << ':';
    write_vertices(out, w.branch_paths[i].vertices);
    out << '\n';
  }
}

Certificate read_certificate(std::istream& in, const std::string& source) {
  Reader rd(in, source);
  std::istringstream hs(rd.expect("certificate header"));
  std::string kind;
  hs >> kind;
  Certificate out;
  if (kind == "decomposition") {
    rd.end(hs);
    out = parse_decomposition(rd);
  } else if (kind == "witness") {
    out = parse_witness(rd, hs);
  } else {
    rd.fail("certificate must start with 'decomposition' or 'witness'");
  }
  std::string extra;
  if (rd.next(extra)) rd.fail("unexpected content after the certificate");
  return out;
}

QuasiIsometry read_qi(std::istream& in, const std::string& source) {
  Reader rd(in, source);
  std::istringstream hs(rd.expect("qi header"));
  rd.word(hs, "qi");
  QuasiIsometry qi;
  qi.m = rd.integer(hs, "m");
  qi.a = rd.integer(hs, "a");
  qi.M = rd.integer(hs, "M");
  qi.A = rd.integer(hs, "A");
  qi.r = rd.integer(hs, "r");
  rd.end(hs);
  if (qi.m < 1 || qi.M < 1 || qi.a < 0 || qi.A < 0 || qi.r < 0) rd.fail("need m, M >= 1 and a, A, r >= 0");
  std::string line;
  while (rd.next(line)) {
    std::istringstream ls(line);
    std::int64_t h = rd.integer(ls, "node");
    if (h != static_cast<std::int64_t>(qi.phi.size())) rd.fail("map lines must be in node order, expected node " + std::to_string(qi.phi.size()));
    rd.word(ls, "->");
    std::int64_t v = rd.integer(ls, "image vertex");
    if (v < 0 || v > std::numeric_limits<int>::max()) rd.fail("image vertex out of range");
    rd.end(ls);
    qi.phi.push_back(static_cast<Vertex>(v));
  }
  return qi;
}

void write_qi(std::ostream& out, const QuasiIsometry& qi) {
  out << "qi " << qi.m << ' ' << qi.a << ' ' << qi.M << ' ' << qi.A << ' ' << qi.r << '\n';
  for (std::size_t h = 0; h < qi.phi.size(); ++h) out << h << " -> " << qi.phi[h] << '\n';
}

void write_dot(std::ostream& out, const GraphDecomposition& dec) {
  out << "graph decomposition {\n";
  for (std::size_t h = 0; h < dec.bags.size(); ++h) {
    out << "  n" << h << " [label=\"" << h << ":";
    write_vertices(out, dec.bags[h]);
    out << "\"];\n";
  }
  for (auto [u, v] : dec.decomposition_graph.edges()) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
}

}  // namespace radial::io
