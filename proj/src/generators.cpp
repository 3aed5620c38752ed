#include "radial/generators.hpp"

#include <algorithm>
#include <iterator>

namespace radial::gen {

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw InputError("generator: " + what);
}

}  // namespace

Graph path(int n) {
  need(n >= 0, "path length must be >= 0");
  Graph g(n + 1);
  for (int i = 0; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  need(n >= 3, "cycle length must be >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  need(n >= 1, "complete graph needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph star(int l) {
  need(l >= 0, "star needs l >= 0");
  Graph g(l + 1);
  for (int i = 1; i <= l; ++i) g.add_edge(0, i);
  return g;
}

Graph grid(int rows, int cols) {
  need(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
  Graph g(rows * cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      int v = i * cols + j;
      if (j + 1 < cols) g.add_edge(v, v + 1);
      if (i + 1 < rows) g.add_edge(v, v + cols);
    }
  }
  return g;
}

Graph triangle() { return cycle(3); }
Graph claw() { return star(3); }

Graph wrench() {
  Graph g(6);
  for (auto [u, v] : std::vector<Edge>{{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}}) g.add_edge(u, v);
  return g;
}

Graph basic(const std::string& family, const std::vector<int>& p) {
  auto arity = [&](std::size_t n) {
    need(p.size() == n, family + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (family == "path") return arity(1), path(p[0]);
  if (family == "cycle") return arity(1), cycle(p[0]);
  if (family == "complete") return arity(1), complete(p[0]);
  if (family == "star") return arity(1), star(p[0]);
  if (family == "grid") return arity(2), grid(p[0], p[1]);
  if (family == "triangle") return arity(0), triangle();
  if (family == "claw") return arity(0), claw();
  if (family == "wrench") return arity(0), wrench();
  throw InputError("generator: unknown family '" + family + "'");
}

Graph subdivide(const Graph& g, const std::map<Edge, int>& lengths) {
  const auto edges = g.edges();
  int extra = 0;
  for (const Edge& e : edges) {
    auto it = lengths.find(e);
    need(it != lengths.end(), "no length for edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
    need(it->second >= 1, "edge lengths must be positive");
    extra += it->second - 1;
  }
  Graph out(g.vertex_count() + extra);
  Vertex next = g.vertex_count();
  for (const Edge& e : edges) {
    Vertex prev = e.first;
    for (int i = 1; i < lengths.at(e); ++i) {
      out.add_edge(prev, next);
      prev = next++;
    }
    out.add_edge(prev, e.second);
  }
  return out;
}

Graph subdivide(const Graph& g, int length) {
  std::map<Edge, int> lengths;
  for (const Edge& e : g.edges()) lengths[e] = length;
  return subdivide(g, lengths);
}

TreeOfWheels tree_of_wheels(int n, int d) {
  need(n >= 3, "tree of wheels needs n >= 3");
  need(d >= 0, "tree of wheels needs d >= 0");
  TreeOfWheels t;
  Graph& g = t.graph;
  auto close_wheel = [&](Wheel& w) {
    w.hub = g.add_vertex();
    for (int i = 0; i < n; ++i) {
      g.add_edge(w.rim[i], w.rim[(i + 1) % n]);
      g.add_edge(w.hub, w.rim[i]);
    }
  };
  Wheel centre;
  for (int i = 0; i < n; ++i) centre.rim.push_back(g.add_vertex());
  close_wheel(centre);
  t.wheels.push_back(centre);

  std::size_t level_begin = 0;
  for (int depth = 1; depth <= d; ++depth) {
    const std::size_t level_end = t.wheels.size();
    for (std::size_t p = level_begin; p < level_end; ++p) {
      for (int i = 1; i <= n; ++i) {
        if (depth > 1 && i == 1) continue;
        const Wheel& parent = t.wheels[p];
        Wheel w;
        w.sequence = parent.sequence;
        w.sequence.push_back(i);
        w.rim.assign(n, -1);
        w.rim[1] = parent.rim[i - 1];
        w.rim[0] = parent.rim[i % n];
        for (int j = 2; j < n; ++j) w.rim[j] = g.add_vertex();
        close_wheel(w);
        t.wheels.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return t;
}

Graph split_subdivide(const Graph& m, int R, Vertex v) {
  need(R >= 1, "split_subdivide needs R >= 1");
  m.check(v);
  need(m.degree(v) >= 4, "split vertex must have degree >= 4");
  const int inner = 4 * R;
  Graph s = subdivide(m, inner + 1);
  // Subdivision vertex next to v on each branch, keyed by the far end in m.
  std::map<Vertex, Vertex> first;
  Vertex next = m.vertex_count();
  for (const Edge& e : m.edges()) {
    if (e.first == v) first[e.second] = next;
    if (e.second == v) first[e.first] = next + inner - 1;
    next += inner;
  }
  const Vertex ue = s.vertex_count();
  Graph out(ue + 1);
  const Vertex a = first.begin()->second, b = std::next(first.begin())->second;
  for (const Edge& e : s.edges()) {
    const bool at_v = e.first == v || e.second == v;
    const Vertex other = e.first == v ? e.second : e.first;
    if (at_v && (other == a || other == b)) {
      out.add_edge(ue, other);
    } else {
      out.add_edge(e.first, e.second);
    }
  }
  out.add_edge(ue, v);
  return out;
}

}  // namespace radial::gen
