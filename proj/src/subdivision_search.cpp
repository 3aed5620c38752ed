// Bounded search for quasi-geodesic subdivisions.
//
// Families searched, in canonical order:
//   K3  - simple cycles of length >= 3(k+1), enumerated from their least vertex
//         (chordal cycles are pruned when c = 1);
//   K13 - a centre x and three leaves in distinct subtrees of the lex-least BFS tree of x;
//   W   - a lex-least shortest a-b path plus two leaves for each of a and b taken from the
//         lex-least BFS trees of a and b with the rest of the a-b path removed.
// "exhausted" means every member of the family was examined.

#include <algorithm>

#include "radial/obstructions.hpp"

namespace radial {

namespace {

using Status = SearchResult::Status;

struct Budget {
  std::int64_t left;
  bool spend() { return left-- > 0; }
};

struct CycleSearch {
  const Graph& g;
  std::int64_t k, c;
  Budget& budget;
  std::vector<Vertex> path;
  std::vector<char> on_path;
  std::optional<SubdivisionWitness> found;
  bool capped = false;

  bool chord_free(Vertex w) const {
    if (c != 1) return true;
    for (Vertex x : g.neighbors(w)) {
      if (on_path[x] && x != path.back() && x != path.front()) return false;
    }
    return true;
  }

  void grow(Vertex s) {
    if (found || capped) return;
    Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (found || capped) return;
      if (w == s && path.size() >= 3 && path[1] < last &&
          static_cast<std::int64_t>(path.size()) >= 3 * (k + 1)) {
        if (!budget.spend()) {
          capped = true;
          return;
        }
        if (is_cycle_in(g, path) && quasi_geodesic_constant(g, cycle_subgraph(path)).at_most(c)) {
          found = witness_from_cycle(g, path);
        }
        continue;
      }
      if (w <= s || on_path[w]) continue;
      if (!chord_free(w)) continue;
      path.push_back(w);
      on_path[w] = 1;
      grow(s);
      on_path[w] = 0;
      path.pop_back();
    }
  }
};

SearchResult search_k3(const Graph& g, std::int64_t k, std::int64_t c, Budget& budget) {
  CycleSearch cs{g, k, c, budget, {}, std::vector<char>(g.vertex_count(), 0), std::nullopt, false};
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    cs.path.assign(1, s);
    cs.on_path[s] = 1;
    cs.grow(s);
    cs.on_path[s] = 0;
    if (cs.found) return {Status::found, cs.found};
    if (cs.capped) return {Status::cap_hit, std::nullopt};
  }
  return {Status::exhausted, std::nullopt};
}

// Lex-least BFS tree from root in g restricted to allowed vertices.
struct BfsTree {
  std::vector<int> dist;
  std::vector<Vertex> parent;
  std::vector<Vertex> branch;  // child of the root above each vertex

  Path path_from_root(Vertex y) const {
    Path p;
    for (Vertex v = y; v >= 0; v = parent[v]) p.vertices.push_back(v);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
  }
};

BfsTree bfs_tree(const Graph& g, Vertex root, const std::vector<char>& allowed) {
  const int n = g.vertex_count();
  BfsTree t{std::vector<int>(n, -1), std::vector<Vertex>(n, -1), std::vector<Vertex>(n, -1)};
  std::vector<Vertex> queue{root};
  t.dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (!allowed[w] || t.dist[w] >= 0) continue;
      t.dist[w] = t.dist[u] + 1;
      queue.push_back(w);
    }
  }
  for (Vertex v : queue) {
    if (v == root) continue;
    for (Vertex w : g.neighbors(v)) {
      if (allowed[w] && t.dist[w] == t.dist[v] - 1) {
        t.parent[v] = w;
        break;
      }
    }
    t.branch[v] = t.parent[v] == root ? v : t.branch[t.parent[v]];
  }
  return t;
}

std::vector<Vertex> far_leaves(const BfsTree& t, std::int64_t k) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(t.dist.size()); ++v) {
    if (t.dist[v] >= k + 1) out.push_back(v);
  }
  return out;
}

bool accept(const Graph& g, const SubdivisionWitness& w, std::int64_t k, std::int64_t c) {
  return w.k >= k && w.c <= c && verify_witness(g, w).ok;
}

SearchResult search_k13(const Graph& g, std::int64_t k, std::int64_t c, Budget& budget) {
  std::vector<char> all(g.vertex_count(), 1);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (g.degree(x) < 3) continue;
    BfsTree t = bfs_tree(g, x, all);
    auto leaves = far_leaves(t, k);
    const int L = static_cast<int>(leaves.size());
    for (int i = 0; i < L; ++i) {
      for (int j = i + 1; j < L; ++j) {
        if (t.branch[leaves[j]] == t.branch[leaves[i]]) continue;
        for (int l = j + 1; l < L; ++l) {
          Vertex a = leaves[i], b = leaves[j], d = leaves[l];
          if (t.branch[d] == t.branch[a] || t.branch[d] == t.branch[b]) continue;
          if (!budget.spend()) return {Status::cap_hit, std::nullopt};
          auto w = make_witness(g, Pattern::K13, {x, a, b, d},
                                {t.path_from_root(a), t.path_from_root(b), t.path_from_root(d)});
          if (accept(g, w, k, c)) return {Status::found, w};
        }
      }
    }
  }
  return {Status::exhausted, std::nullopt};
}

struct Pendants {
  BfsTree tree;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

Pendants pendants(const Graph& g, Vertex root, const Path& middle, std::int64_t k) {
  std::vector<char> allowed(g.vertex_count(), 1);
  for (Vertex v : middle.vertices) allowed[v] = 0;
  allowed[root] = 1;
  Pendants p{bfs_tree(g, root, allowed), {}};
  auto leaves = far_leaves(p.tree, k);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      if (p.tree.branch[leaves[i]] != p.tree.branch[leaves[j]]) p.pairs.emplace_back(leaves[i], leaves[j]);
    }
  }
  return p;
}

SearchResult search_w(const Graph& g, std::int64_t k, std::int64_t c, Budget& budget) {
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    if (g.degree(a) < 3) continue;
    for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
      if (g.degree(b) < 3) continue;
      auto mid = shortest_path(g, a, b);
      if (!mid || mid->length() < k + 1) continue;
      Pendants pa = pendants(g, a, *mid, k);
      if (pa.pairs.empty()) continue;
      Pendants pb = pendants(g, b, *mid, k);
      for (auto [y1, y2] : pa.pairs) {
        Path s1 = pa.tree.path_from_root(y1), s2 = pa.tree.path_from_root(y2);
        VertexSet used = set_union(make_set(s1.vertices), make_set(s2.vertices));
        for (auto [z1, z2] : pb.pairs) {
          Path t1 = pb.tree.path_from_root(z1), t2 = pb.tree.path_from_root(z2);
          if (!set_intersection(used, set_union(make_set(t1.vertices), make_set(t2.vertices))).empty()) {
            continue;
          }
          if (!budget.spend()) return {Status::cap_hit, std::nullopt};
          auto w = make_witness(g, Pattern::W, {y1, y2, a, b, z1, z2},
                                {s1.reversed(), s2.reversed(), *mid, t1, t2});
          if (accept(g, w, k, c)) return {Status::found, w};
        }
      }
    }
  }
  return {Status::exhausted, std::nullopt};
}

}  // namespace

SearchResult find_subdivision(const Graph& g, Pattern p, std::int64_t k, std::int64_t c,
                              const SearchCaps& caps) {
  if (k < 0 || c < 1) throw InputError("find_subdivision: need k >= 0 and c >= 1");
  Budget budget{caps.max_candidates};
  switch (p) {
    case Pattern::K3: return search_k3(g, k, c, budget);
    case Pattern::K13: return search_k13(g, k, c, budget);
    case Pattern::W: return search_w(g, k, c, budget);
  }
  return {};
}

}  // namespace radial
