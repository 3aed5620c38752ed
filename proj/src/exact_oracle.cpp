// Exhaustive search for decompositions of small graphs.
//
// Trees (and their path and subdivided-star special cases) are grown node by node in BFS order.
// Only normalized decompositions are searched: no bag contains, or is contained in, an adjacent
// bag. A child must then hold a vertex its parent lacks, and since every vertex's node set is
// connected that vertex is new to the whole decomposition, so at most |V| nodes occur.
//
// Cycles are grown as bag sequences B_0 .. B_{L-1} whose vertex occurrences are cyclic arcs.
// Length 3 is searched without normalization; longer cycles are normalized, which bounds L by
// |V| because each wrap-around pair then starts some vertex's arc.

#include "radial/exact_oracle.hpp"

#include <cstdint>

namespace radial {

namespace {

using Mask = std::uint32_t;
constexpr int kMaxMaskVertices = 24;

struct Setup {
  int n = 0;
  Mask all = 0;
  std::vector<Mask> adj;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Mask> good;  // ascending
};

int mask_radius(const Setup& s, Mask m) {
  int best = -1;
  for (int c = 0; c < s.n; ++c) {
    if (!(m >> c & 1)) continue;
    Mask reached = Mask(1) << c, front = reached;
    int ecc = 0;
    while ((reached & m) != m) {
      Mask next = 0;
      for (int v = 0; v < s.n; ++v) {
        if (front >> v & 1) next |= s.adj[v];
      }
      next &= m & ~reached;
      if (!next) return -1;  // disconnected
      reached |= next;
      front = next;
      ++ecc;
      if (best >= 0 && ecc >= best) break;
    }
    if ((reached & m) == m && (best < 0 || ecc < best)) best = ecc;
  }
  return best;
}

Setup make_setup(const Graph& g, int r) {
  Setup s;
  s.n = g.vertex_count();
  s.all = s.n == 32 ? ~Mask(0) : (Mask(1) << s.n) - 1;
  s.adj.assign(s.n, 0);
  for (auto [u, v] : g.edges()) {
    s.adj[u] |= Mask(1) << v;
    s.adj[v] |= Mask(1) << u;
    s.edges.emplace_back(u, v);
  }
  for (Mask m = 1; m <= s.all && m != 0; ++m) {
    int rad = mask_radius(s, m);
    if (rad >= 0 && rad <= r) s.good.push_back(m);
  }
  return s;
}

VertexSet to_set(Mask m) {
  VertexSet out;
  for (int v = 0; m; ++v, m >>= 1) {
    if (m & 1) out.push_back(v);
  }
  return out;
}

bool has(Mask m, int v) { return m >> v & 1; }

struct Budget {
  std::int64_t left;
  bool capped = false;
  bool spend() {
    if (left-- > 0) return true;
    capped = true;
    return false;
  }
};

struct TreeSearch {
  const Setup& s;
  GraphClass cls;
  Budget& budget;
  std::vector<Mask> bag;
  std::vector<int> parent, degree;
  Mask seen = 0;

  bool covered(int u, int v) const {
    for (Mask b : bag) {
      if (has(b, u) && has(b, v)) return true;
    }
    return false;
  }

  // A vertex is closed once no node that may still take children contains it.
  bool closed(int v, int frontier) const {
    for (int i = frontier; i < static_cast<int>(bag.size()); ++i) {
      if (has(bag[i], v)) return false;
    }
    return true;
  }

  bool may_branch(int p) const {
    const int d = degree[p] + 1;
    switch (cls) {
      case GraphClass::path: return d <= 2;
      case GraphClass::star:
        if (d < 3) return true;
        for (int i = 0; i < static_cast<int>(degree.size()); ++i) {
          if (i != p && degree[i] >= 3) return false;
        }
        return true;
      default: return true;
    }
  }

  bool dfs(int frontier) {
    if (!budget.spend()) return false;
    bool complete = seen == s.all;
    for (auto [u, v] : s.edges) {
      if (covered(u, v)) continue;
      complete = false;
      const bool su = has(seen, u), sv = has(seen, v);
      if (su && sv) return false;
      if ((su && closed(u, frontier)) || (sv && closed(v, frontier))) return false;
    }
    if (complete) return true;
    const int count = static_cast<int>(bag.size());
    for (int p = frontier; p < count; ++p) {
      if (!may_branch(p)) continue;
      const bool sibling = parent.back() == p;
      for (Mask m : s.good) {
        if (sibling && m <= bag.back()) continue;
        if ((m & seen) & ~bag[p]) continue;
        if (!(m & ~seen)) continue;
        if (!(bag[p] & ~m)) continue;
        const Mask before = seen;
        bag.push_back(m);
        parent.push_back(p);
        degree.push_back(1);
        ++degree[p];
        seen |= m;
        if (dfs(p)) return true;
        seen = before;
        --degree[p];
        bag.pop_back();
        parent.pop_back();
        degree.pop_back();
        if (budget.capped) return false;
      }
    }
    return false;
  }

  bool run() {
    for (Mask m : s.good) {
      if (!(m & 1)) continue;
      bag = {m};
      parent = {-1};
      degree = {0};
      seen = m;
      if (dfs(0)) return true;
      if (budget.capped) return false;
    }
    return false;
  }

  GraphDecomposition result() const {
    GraphDecomposition dec{Graph(static_cast<int>(bag.size())), {}};
    for (std::size_t i = 0; i < bag.size(); ++i) {
      dec.bags.push_back(to_set(bag[i]));
      if (parent[i] >= 0) dec.decomposition_graph.add_edge(parent[i], static_cast<Vertex>(i));
    }
    return dec;
  }
};

struct CycleSearch {
  const Setup& s;
  Budget& budget;
  bool strict = false;
  int min_len = 3, max_len = 3;
  std::vector<Mask> bag;

  // Occurrence bookkeeping: pre = vertices of B_0 whose first arc began at 0; ended = vertices
  // not in the last bag that were seen; suffix = prefix vertices that reappeared and must stay.
  struct State {
    Mask seen = 0, pre = 0, ended = 0, suffix = 0;
  } st;

  bool covered(int u, int v) const {
    for (Mask b : bag) {
      if (has(b, u) && has(b, v)) return true;
    }
    return false;
  }

  bool contained(Mask a, Mask b) const { return !(a & ~b); }

  bool closes() const {
    const int L = static_cast<int>(bag.size());
    if (L < min_len || st.seen != s.all) return false;
    if (strict && (contained(bag.back(), bag.front()) || contained(bag.front(), bag.back()))) return false;
    for (auto [u, v] : s.edges) {
      if (!covered(u, v)) return false;
    }
    return true;
  }

  bool dfs() {
    if (!budget.spend()) return false;
    if (closes()) return true;
    if (static_cast<int>(bag.size()) >= max_len) return false;
    const Mask dead = st.ended & ~st.pre;
    for (auto [u, v] : s.edges) {
      if ((has(dead, u) || has(dead, v)) && !covered(u, v)) return false;
    }
    const Mask last = bag.back();
    for (Mask m : s.good) {
      if (m & dead) continue;
      if (st.suffix & ~m) continue;
      if (strict && (contained(m, last) || contained(last, m))) continue;
      const State before = st;
      const Mask reopened = m & st.ended & st.pre;
      st.suffix |= reopened;
      st.ended = (st.ended & ~reopened) | (last & ~m);
      st.seen |= m;
      bag.push_back(m);
      if (dfs()) return true;
      bag.pop_back();
      st = before;
      if (budget.capped) return false;
    }
    return false;
  }

  bool run() {
    for (Mask m : s.good) {
      if (!(m & 1)) continue;
      bag = {m};
      st = State{m, m, 0, 0};
      if (dfs()) return true;
      if (budget.capped) return false;
    }
    return false;
  }

  GraphDecomposition result() const {
    GraphDecomposition dec{cycle_graph(static_cast<int>(bag.size())), {}};
    for (Mask b : bag) dec.bags.push_back(to_set(b));
    return dec;
  }
};

ExactResult at_most(GraphDecomposition dec) {
  return {ExactResult::Kind::at_most, std::move(dec), {}};
}

ExactResult inconclusive(std::string why) { return {ExactResult::Kind::inconclusive, std::nullopt, std::move(why)}; }

}  // namespace

ExactResult exact_width_at_most(const Graph& g, GraphClass cls, int r, const ExactCaps& caps) {
  if (r < 0) throw InputError("exact: negative radius");
  if (g.vertex_count() == 0) throw InputError("exact: empty graph");
  if (!is_connected(g)) throw InputError("exact: graph is disconnected");
  const int n = g.vertex_count();
  if (n > caps.max_vertices) {
    return inconclusive("graph has " + std::to_string(n) + " vertices, above max_vertices " +
                        std::to_string(caps.max_vertices));
  }
  if (n > kMaxMaskVertices) {
    return inconclusive("graph has " + std::to_string(n) + " vertices, above the search limit " +
                        std::to_string(kMaxMaskVertices));
  }
  if (!(radius(g) > Distance(r))) {
    if (cls == GraphClass::cycle) return at_most({cycle_graph(3), {all_vertices(g), all_vertices(g), all_vertices(g)}});
    return at_most({Graph(1), {all_vertices(g)}});
  }

  const Setup s = make_setup(g, r);
  Budget budget{caps.max_steps};
  const std::string capped = "search step budget " + std::to_string(caps.max_steps) + " exhausted";
  if (cls == GraphClass::cycle) {
    CycleSearch three{s, budget, false, 3, 3, {}, {}};
    if (three.run()) return at_most(three.result());
    if (budget.capped) return inconclusive(capped);
    CycleSearch longer{s, budget, true, 4, std::max(4, n), {}, {}};
    if (longer.run()) return at_most(longer.result());
    if (budget.capped) return inconclusive(capped);
    return {ExactResult::Kind::exceeds_all, std::nullopt, {}};
  }
  TreeSearch ts{s, cls, budget, {}, {}, {}, 0};
  if (ts.run()) return at_most(ts.result());
  if (budget.capped) return inconclusive(capped);
  return {ExactResult::Kind::exceeds_all, std::nullopt, {}};
}

ExactWidth exact_width(const Graph& g, GraphClass cls, const ExactCaps& caps) {
  if (g.vertex_count() == 0) throw InputError("exact: empty graph");
  if (!is_connected(g)) throw InputError("exact: graph is disconnected");
  const std::int64_t rad = radius(g).value();
  ExactWidth out;
  for (int r = 0; r <= rad; ++r) {
    ExactResult res = exact_width_at_most(g, cls, r, caps);
    if (res.kind == ExactResult::Kind::at_most) {
      out.conclusive = true;
      out.value = out.lower_bound = r;
      return out;
    }
    if (res.kind == ExactResult::Kind::inconclusive) {
      out.lower_bound = r;
      out.caps_hit = res.caps_hit;
      return out;
    }
  }
  throw InvariantError("exact_width: no decomposition at radius rad(g)");
}

}  // namespace radial
