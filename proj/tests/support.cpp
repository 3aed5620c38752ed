#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

std::vector<std::vector<int>> floyd(int n, const std::vector<Vertex>& vertices,
                                    const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (Vertex v : vertices) d[v][v] = 0;
  for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (Vertex k : vertices) {
    for (Vertex i : vertices) {
      if (d[i][k] == kInf) continue;
      for (Vertex j : vertices) {
        if (d[k][j] != kInf && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

std::vector<std::vector<int>> floyd(const Graph& g) {
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return floyd(g.vertex_count(), all, g.edges());
}

namespace {

std::vector<std::pair<Vertex, Vertex>> induced(const Graph& g, const std::vector<Vertex>& U) {
  std::set<Vertex> in(U.begin(), U.end());
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto [u, v] : g.edges()) {
    if (in.count(u) && in.count(v)) out.emplace_back(u, v);
  }
  return out;
}

int radius_from(const std::vector<std::vector<int>>& d, const std::vector<Vertex>& centres,
                const std::vector<Vertex>& U) {
  if (U.empty()) return 0;
  int best = kInf;
  for (Vertex c : centres) {
    int ecc = 0;
    for (Vertex u : U) ecc = std::max(ecc, d[c][u]);
    best = std::min(best, ecc);
  }
  return best;
}

}  // namespace

int part_radius(const Graph& g, const std::vector<Vertex>& U) {
  return radius_from(floyd(g.vertex_count(), U, induced(g, U)), U, U);
}

int outer_radius(const Graph& g, const std::vector<Vertex>& U) {
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return radius_from(floyd(g), all, U);
}

bool axioms_hold(const Graph& g, const radial::GraphDecomposition& dec) {
  const Graph& H = dec.decomposition_graph;
  if (static_cast<int>(dec.bags.size()) != H.vertex_count()) return false;
  std::vector<std::vector<int>> where(g.vertex_count());
  for (int h = 0; h < H.vertex_count(); ++h) {
    for (Vertex v : dec.bags[h]) {
      if (v < 0 || v >= g.vertex_count()) return false;
      where[v].push_back(h);
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (where[v].empty()) return false;
    // union-find over the nodes holding v
    std::vector<int> parent(H.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::set<int> nodes(where[v].begin(), where[v].end());
    for (auto [a, b] : H.edges()) {
      if (nodes.count(a) && nodes.count(b)) parent[find(a)] = find(b);
    }
    int root = find(where[v][0]);
    for (int h : where[v]) {
      if (find(h) != root) return false;
    }
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& bag : dec.bags) {
      covered = covered || (std::binary_search(bag.begin(), bag.end(), u) && std::binary_search(bag.begin(), bag.end(), v));
    }
    if (!covered) return false;
  }
  return true;
}

int width(const Graph& g, const radial::GraphDecomposition& dec) {
  int w = 0;
  for (const auto& bag : dec.bags) w = std::max(w, part_radius(g, bag));
  return w;
}

int outer_width(const Graph& g, const radial::GraphDecomposition& dec) {
  std::vector<Vertex> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  const auto d = floyd(g);
  int w = 0;
  for (const auto& bag : dec.bags) w = std::max(w, radius_from(d, all, bag));
  return w;
}

int spread(const Graph& g, const radial::GraphDecomposition& dec) {
  const Graph& H = dec.decomposition_graph;
  std::vector<std::vector<Vertex>> where(g.vertex_count());
  for (int h = 0; h < H.vertex_count(); ++h) {
    for (Vertex v : dec.bags[h]) where[v].push_back(h);
  }
  std::vector<Vertex> nodes(H.vertex_count());
  std::iota(nodes.begin(), nodes.end(), 0);
  const auto d = floyd(H);
  int s = 0;
  for (const auto& hv : where) s = std::max(s, radius_from(d, nodes, hv));
  return s;
}

bool honest(const radial::GraphDecomposition& dec) {
  for (auto [a, b] : dec.decomposition_graph.edges()) {
    const auto& x = dec.bags[a];
    const auto& y = dec.bags[b];
    if (std::none_of(x.begin(), x.end(), [&](Vertex v) { return std::binary_search(y.begin(), y.end(), v); })) {
      return false;
    }
  }
  return true;
}

bool qi_ok(const Graph& g, const Graph& h, const radial::QuasiIsometry& qi) {
  if (static_cast<int>(qi.phi.size()) != h.vertex_count()) return false;
  const auto dg = floyd(g);
  const auto dh = floyd(h);
  for (int x = 0; x < h.vertex_count(); ++x) {
    for (int y = 0; y < h.vertex_count(); ++y) {
      const std::int64_t DH = dh[x][y], DG = dg[qi.phi[x]][qi.phi[y]];
      if (DH == kInf || DG == kInf) {
        if (DH != DG) return false;
        continue;
      }
      if (DH > qi.m * DG + qi.a || DG > qi.M * DH + qi.A) return false;
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int best = kInf;
    for (Vertex x : qi.phi) best = std::min(best, dg[v][x]);
    if (best > qi.r) return false;
  }
  return true;
}

std::pair<std::int64_t, std::int64_t> qg_constant(const Graph& g, const std::vector<Vertex>& vertices,
                                                  const std::vector<std::pair<Vertex, Vertex>>& edges) {
  auto dg = floyd(g);
  auto dx = floyd(g.vertex_count(), vertices, edges);
  std::int64_t num = 1, den = 1;
  for (Vertex u : vertices) {
    for (Vertex v : vertices) {
      if (u >= v) continue;
      if (dx[u][v] == kInf) return {kInf, 1};
      if (static_cast<std::int64_t>(dx[u][v]) * den > num * dg[u][v]) {
        num = dx[u][v];
        den = dg[u][v];
      }
    }
  }
  std::int64_t gcd = std::gcd(num, den);
  return {num / gcd, den / gcd};
}

bool qg_at_most(const Graph& g, const std::vector<Vertex>& vertices,
                const std::vector<std::pair<Vertex, Vertex>>& edges, std::int64_t c) {
  auto [num, den] = qg_constant(g, vertices, edges);
  return num != kInf && num <= c * den;
}

bool witness_ok(const Graph& g, const radial::SubdivisionWitness& w) {
  const Graph p = radial::pattern_graph(w.pattern);
  const auto pe = p.edges();
  if (static_cast<int>(w.branch_vertices.size()) != p.vertex_count() || w.branch_paths.size() != pe.size()) {
    return false;
  }
  std::set<Vertex> branch(w.branch_vertices.begin(), w.branch_vertices.end());
  if (static_cast<int>(branch.size()) != p.vertex_count()) return false;
  std::set<Vertex> interior;
  std::set<Vertex> vertices(branch);
  std::set<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < pe.size(); ++i) {
    const auto& path = w.branch_paths[i].vertices;
    if (path.size() < 2) return false;
    if (path.front() != w.branch_vertices[pe[i].first] || path.back() != w.branch_vertices[pe[i].second]) return false;
    if (static_cast<std::int64_t>(path.size()) - 1 < w.k + 1) return false;
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      if (!g.adjacent(path[j], path[j + 1])) return false;
      edges.insert(std::minmax(path[j], path[j + 1]));
    }
    for (std::size_t j = 1; j + 1 < path.size(); ++j) {
      if (branch.count(path[j]) || !interior.insert(path[j]).second) return false;
      vertices.insert(path[j]);
    }
  }
  return qg_at_most(g, {vertices.begin(), vertices.end()}, {edges.begin(), edges.end()}, w.c);
}

Graph random_connected(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.add_edge(v, pick(rng));
  }
  std::bernoulli_distribution extra(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (extra(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<Named> corpus(std::uint64_t seed) {
  namespace gen = radial::gen;
  std::vector<Named> out;
  auto add = [&](std::string name, Graph g) { out.push_back({std::move(name), std::move(g)}); };
  for (int n : {1, 2, 5, 12, 25, 40, 60, 90}) add("path " + std::to_string(n), gen::path(n));
  for (int n : {3, 4, 8, 16, 30, 50, 70, 140}) add("cycle " + std::to_string(n), gen::cycle(n));
  for (int r = 1; r <= 10; r += 3) {
    for (int c = r; c <= 10; c += 3) add("grid " + std::to_string(r) + "x" + std::to_string(c), gen::grid(r, c));
  }
  add("grid 10x10", gen::grid(10, 10));
  for (int legs : {3, 4, 5}) {
    for (int len : {5, 20, 40}) {
      add("spider " + std::to_string(legs) + "/" + std::to_string(len), gen::subdivide(gen::star(legs), len));
    }
  }
  for (int len : {1, 5, 12, 25, 35}) add("wrench/" + std::to_string(len), gen::subdivide(gen::wrench(), len));
  for (int n : {3, 4, 6}) {
    for (int d : {0, 1, 2}) add("wheels " + std::to_string(n) + "/" + std::to_string(d), gen::tree_of_wheels(n, d).graph);
  }
  for (int n : {2, 4, 6}) add("complete " + std::to_string(n), gen::complete(n));
  std::mt19937_64 rng(seed);
  const int randoms = 200 - static_cast<int>(out.size()) + 20;
  for (int i = 0; i < randoms; ++i) {
    std::uniform_int_distribution<int> size(2, 60);
    const int n = size(rng);
    const double p = (i % 3 == 0) ? 0.0 : (i % 3 == 1 ? 1.0 / n : 3.0 / n);
    add("random " + std::to_string(i) + " n=" + std::to_string(n), random_connected(n, p, rng));
  }
  return out;
}

}  // namespace oracle
