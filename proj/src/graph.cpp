#include "radial/graph.hpp"

#include <algorithm>
#include <sstream>

#include "radial/kernels.hpp"

namespace radial {

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.resize(n);
}

Vertex Graph::check(Vertex v) const {
  if (v < 0 || v >= vertex_count()) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(vertex_count()) + ")");
  }
  return v;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

Vertex Graph::add_vertex() {
  adj_.emplace_back();
  return vertex_count() - 1;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& au = neighbors(u);
  check(v);
  return std::binary_search(au.begin(), au.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Path Path::subpath(int i, int j) const {
  if (i < 0 || j >= static_cast<int>(vertices.size()) || i > j) {
    throw std::out_of_range("subpath bounds");
  }
  return Path{{vertices.begin() + i, vertices.begin() + j + 1}};
}

VertexSet make_set(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet all_vertices(const Graph& g) {
  VertexSet out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out[v] = v;
  return out;
}

std::vector<int> bfs(const Graph& g, const std::vector<Vertex>& sources) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  for (Vertex s : sources) {
    g.check(s);
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

Distance to_distance(int d) { return d < 0 ? Distance::infinity() : Distance(d); }

}  // namespace

std::vector<Distance> distances(const Graph& g, Vertex source) {
  auto raw = bfs(g, {source});
  std::vector<Distance> out(raw.size());
  std::transform(raw.begin(), raw.end(), out.begin(), to_distance);
  return out;
}

Distance distance(const Graph& g, Vertex u, Vertex v) {
  g.check(v);
  return to_distance(bfs(g, {u})[v]);
}

Distance radius(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  if (!is_connected(g)) return Distance::infinity();
  return radius(g, all_vertices(g));
}

namespace {

// Per-vertex eccentricity with respect to U; -1 if some u is unreachable.
std::vector<std::int64_t> eccentricities(const Graph& g, const VertexSet& U) {
  for (Vertex u : U) g.check(u);
  DistanceRows rows = distance_rows(g, U);
  std::vector<std::int64_t> ecc(g.vertex_count(), 0);
  for (int i = 0; i < rows.row_count(); ++i) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      int d = rows.raw(i, v);
      if (ecc[v] < 0) continue;
      ecc[v] = d < 0 ? -1 : std::max<std::int64_t>(ecc[v], d);
    }
  }
  return ecc;
}

}  // namespace

Distance radius(const Graph& g, const VertexSet& U) {
  if (U.empty()) return 0;
  auto c = center(g, U);
  if (!c) return Distance::infinity();
  return eccentricities(g, U)[*c];
}

std::optional<Vertex> center(const Graph& g, const VertexSet& U) {
  if (U.empty()) return std::nullopt;
  auto ecc = eccentricities(g, U);
  std::optional<Vertex> best;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (ecc[v] < 0) continue;
    if (!best || ecc[v] < ecc[*best]) best = v;
  }
  return best;
}

VertexSet ball(const Graph& g, const VertexSet& X, int r) {
  if (r < 0) throw InputError("negative ball radius");
  auto d = bfs(g, X);
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (d[v] >= 0 && d[v] <= r) out.push_back(v);
  }
  return out;
}

VertexSet ball_closure(const Graph& g, const VertexSet& U, int k) {
  if (k < 0) throw InputError("negative k");
  if (U.empty()) return {};
  DistanceRows rows = distance_rows(g, U);
  std::optional<Edge> violation;
  for (int i = 0; i < rows.row_count(); ++i) {
    bool ok = true;
    for (Vertex w : U) {
      int d = rows.raw(i, w);
      if (d < 0 || d > 2 * k) {
        if (!violation) violation = Edge{U[i], w};
        ok = false;
        break;
      }
    }
    if (ok) return ball(g, U, k);
  }
  std::ostringstream msg;
  msg << "ball_closure: no vertex of U is within " << 2 * k << " of all of U; e.g. dist("
      << violation->first << ", " << violation->second << ") > " << 2 * k;
  throw PreconditionError(msg.str());
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    VertexSet c{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < c.size(); ++head) {
      for (Vertex w : g.neighbors(c[head])) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          c.push_back(w);
        }
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto d = bfs(g, {0});
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

namespace {

// Walk downhill in a BFS layering, taking the lowest neighbour each step.
Path descend(const Graph& g, Vertex s, const std::vector<int>& d) {
  Path p{{s}};
  Vertex cur = s;
  while (d[cur] > 0) {
    for (Vertex w : g.neighbors(cur)) {
      if (d[w] == d[cur] - 1) {
        cur = w;
        break;
      }
    }
    p.vertices.push_back(cur);
  }
  return p;
}

}  // namespace

std::optional<Path> shortest_path(const Graph& g, Vertex s, Vertex t) {
  g.check(s);
  auto d = bfs(g, {t});
  if (d[s] < 0) return std::nullopt;
  return descend(g, s, d);
}

std::optional<Path> shortest_path_to_set(const Graph& g, Vertex s, const VertexSet& X) {
  g.check(s);
  auto d = bfs(g, X);
  if (d[s] < 0) return std::nullopt;
  return descend(g, s, d);
}

Path longest_geodesic_path(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("longest_geodesic_path: empty graph");
  auto diam = diameter(all_pairs_distances(g));
  if (!diam) throw InputError("longest_geodesic_path: graph is disconnected");
  return *shortest_path(g, diam->u, diam->v);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& X) {
  InducedSubgraph s;
  s.to_local.assign(g.vertex_count(), -1);
  s.to_host = X;
  s.graph = Graph(static_cast<int>(X.size()));
  for (std::size_t i = 0; i < X.size(); ++i) s.to_local[g.check(X[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (Vertex w : g.neighbors(X[i])) {
      int j = s.to_local[w];
      if (j > static_cast<int>(i)) s.graph.add_edge(static_cast<int>(i), j);
    }
  }
  return s;
}

namespace {

Edge norm(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

void normalize(Subgraph& s) {
  s.vertices = make_set(std::move(s.vertices));
  std::sort(s.edges.begin(), s.edges.end());
  s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
}

}  // namespace

Subgraph induced_edges(const Graph& g, const VertexSet& X) {
  Subgraph s{X, {}};
  for (Vertex u : X) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && contains(X, w)) s.edges.emplace_back(u, w);
    }
  }
  normalize(s);
  return s;
}

Subgraph path_subgraph(const Path& p) {
  Subgraph s{p.vertices, {}};
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    s.edges.push_back(norm(p.vertices[i - 1], p.vertices[i]));
  }
  normalize(s);
  return s;
}

Subgraph cycle_subgraph(const std::vector<Vertex>& cycle) {
  Subgraph s{cycle, {}};
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    s.edges.push_back(norm(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  normalize(s);
  return s;
}

Subgraph subgraph_union(const Subgraph& a, const Subgraph& b) {
  Subgraph s{set_union(a.vertices, b.vertices), a.edges};
  s.edges.insert(s.edges.end(), b.edges.begin(), b.edges.end());
  normalize(s);
  return s;
}

Graph subgraph_as_graph(int n, const Subgraph& s) {
  Graph h(n);
  for (auto [u, v] : s.edges) h.add_edge(u, v);
  return h;
}

bool is_path_in(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  for (Vertex v : p.vertices) {
    if (v < 0 || v >= g.vertex_count()) return false;
  }
  if (make_set(p.vertices).size() != p.vertices.size()) return false;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    if (!g.adjacent(p.vertices[i - 1], p.vertices[i])) return false;
  }
  return true;
}

bool is_cycle_in(const Graph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 3) return false;
  if (!is_path_in(g, Path{cycle})) return false;
  return g.adjacent(cycle.back(), cycle.front());
}

bool belongs_to(const Graph& h, GraphClass cls) {
  const int n = h.vertex_count();
  if (n == 0 || !is_connected(h)) return false;
  int max_deg = 0, branch = 0;
  for (Vertex v = 0; v < n; ++v) {
    max_deg = std::max(max_deg, h.degree(v));
    if (h.degree(v) >= 3) ++branch;
  }
  const bool tree = h.edge_count() == n - 1;
  switch (cls) {
    case GraphClass::path:
      return tree && max_deg <= 2;
    case GraphClass::cycle:
      if (n < 3) return false;
      for (Vertex v = 0; v < n; ++v) {
        if (h.degree(v) != 2) return false;
      }
      return true;
    case GraphClass::star:
      return tree && branch <= 1;
    case GraphClass::tree:
      return tree;
  }
  return false;
}

std::string class_name(GraphClass cls) {
  switch (cls) {
    case GraphClass::path: return "path";
    case GraphClass::cycle: return "cycle";
    case GraphClass::star: return "star";
    case GraphClass::tree: return "tree";
  }
  return "?";
}

std::optional<GraphClass> parse_class(const std::string& s) {
  if (s == "path") return GraphClass::path;
  if (s == "cycle") return GraphClass::cycle;
  if (s == "star") return GraphClass::star;
  if (s == "tree") return GraphClass::tree;
  return std::nullopt;
}

}  // namespace radial
