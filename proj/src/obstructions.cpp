#include "radial/obstructions.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <tuple>

#include "radial/kernels.hpp"

namespace radial {

std::string pattern_name(Pattern p) {
  switch (p) {
    case Pattern::K3: return "K3";
    case Pattern::K13: return "K13";
    case Pattern::W: return "W";
  }
  return "?";
}

std::optional<Pattern> parse_pattern(const std::string& s) {
  if (s == "K3") return Pattern::K3;
  if (s == "K13") return Pattern::K13;
  if (s == "W") return Pattern::W;
  return std::nullopt;
}

Graph pattern_graph(Pattern p) {
  Graph g;
  switch (p) {
    case Pattern::K3:
      g = Graph(3);
      g.add_edge(0, 1);
      g.add_edge(0, 2);
      g.add_edge(1, 2);
      break;
    case Pattern::K13:
      g = Graph(4);
      for (int i = 1; i <= 3; ++i) g.add_edge(0, i);
      break;
    case Pattern::W:
      // 2 and 3 are the adjacent branch points; 0,1 hang off 2 and 4,5 off 3.
      g = Graph(6);
      g.add_edge(0, 2);
      g.add_edge(1, 2);
      g.add_edge(2, 3);
      g.add_edge(3, 4);
      g.add_edge(3, 5);
      break;
  }
  return g;
}

std::vector<Pattern> forbidden_patterns(GraphClass cls) {
  switch (cls) {
    case GraphClass::path: return {Pattern::K3, Pattern::K13};
    case GraphClass::star: return {Pattern::K3, Pattern::W};
    case GraphClass::tree: return {Pattern::K3};
    case GraphClass::cycle: return {Pattern::K13};
  }
  return {};
}

Subgraph witness_subgraph(const SubdivisionWitness& w) {
  Subgraph s;
  for (const auto& p : w.branch_paths) s = subgraph_union(s, path_subgraph(p));
  s.vertices = set_union(s.vertices, make_set(w.branch_vertices));
  return s;
}

WitnessReport verify_witness(const Graph& g, const SubdivisionWitness& w) {
  WitnessReport rep;
  auto fail = [&rep](const std::string& s) {
    rep.ok = false;
    rep.violations.push_back(s);
  };
  const Graph pat = pattern_graph(w.pattern);
  const auto pedges = pat.edges();
  if (static_cast<int>(w.branch_vertices.size()) != pat.vertex_count()) {
    fail("wrong number of branch vertices");
    return rep;
  }
  if (w.branch_paths.size() != pedges.size()) {
    fail("wrong number of branch paths");
    return rep;
  }
  if (w.k < 0) fail("k is negative");
  if (w.c < 1) fail("c is not positive");
  for (Vertex b : w.branch_vertices) {
    if (b < 0 || b >= g.vertex_count()) {
      fail("branch vertex out of range");
      return rep;
    }
  }
  if (make_set(w.branch_vertices).size() != w.branch_vertices.size()) fail("branch vertices repeat");
  std::vector<int> owner(g.vertex_count(), -1);
  for (Vertex b : w.branch_vertices) owner[b] = -2;
  bool paths_ok = true;
  for (std::size_t e = 0; e < pedges.size(); ++e) {
    const Path& p = w.branch_paths[e];
    const std::string tag = "branch path " + std::to_string(pedges[e].first) + "-" +
                            std::to_string(pedges[e].second);
    if (!is_path_in(g, p)) {
      fail(tag + " is not a path in g");
      paths_ok = false;
      continue;
    }
    if (p.front() != w.branch_vertices[pedges[e].first] ||
        p.back() != w.branch_vertices[pedges[e].second]) {
      fail(tag + " does not join its branch vertices");
    }
    if (p.length() < w.k + 1) {
      fail(tag + " has length " + std::to_string(p.length()) + " < k+1");
    }
    for (int i = 1; i + 1 < static_cast<int>(p.vertices.size()); ++i) {
      Vertex x = p.vertices[i];
      if (owner[x] == -2) {
        fail(tag + " passes through branch vertex " + std::to_string(x));
      } else if (owner[x] >= 0) {
        fail(tag + " shares inner vertex " + std::to_string(x) + " with another branch path");
      }
      owner[x] = static_cast<int>(e);
    }
  }
  if (paths_ok) {
    QgConstant q = quasi_geodesic_constant(g, witness_subgraph(w));
    if (!q.at_most(w.c)) {
      fail("union is not " + std::to_string(w.c) + "-quasi-geodesic (pair " + std::to_string(q.u) +
           ", " + std::to_string(q.v) + ")");
    }
  }
  return rep;
}

SubdivisionWitness make_witness(const Graph& g, Pattern p, std::vector<Vertex> branch,
                                std::vector<Path> paths) {
  SubdivisionWitness w{p, std::move(branch), std::move(paths), 0, 1};
  int shortest = std::numeric_limits<int>::max();
  for (const auto& path : w.branch_paths) shortest = std::min(shortest, path.length());
  w.k = std::max(0, shortest - 1);
  QgConstant q = quasi_geodesic_constant(g, witness_subgraph(w));
  if (q.infinite) throw InvariantError("witness union is disconnected");
  w.c = ceil(q.value);
  return w;
}

SubdivisionWitness witness_from_cycle(const Graph& g, const std::vector<Vertex>& O) {
  const int L = static_cast<int>(O.size());
  if (L < 3) throw PreconditionError("witness_from_cycle: cycle too short");
  const int a = L / 3, b = 2 * L / 3;
  Path p01{{O.begin(), O.begin() + a + 1}};
  Path p12{{O.begin() + a, O.begin() + b + 1}};
  Path p02{{O[0]}};
  for (int i = L - 1; i >= b; --i) p02.vertices.push_back(O[i]);
  return make_witness(g, Pattern::K3, {O[0], O[a], O[b]}, {p01, p02, p12});
}

LowerBounds lower_bounds(const Graph& g, const SubdivisionWitness& w) {
  if (!verify_witness(g, w).ok) throw PreconditionError("lower_bounds: witness does not verify");
  return {Rational(w.k, 4), Rational(w.k, 12 * w.c)};
}

namespace {

// M0-M1 subpaths of the cycle; when C is given, only those with an inner vertex in C.
int count_crossings(const std::vector<Vertex>& O, const VertexSet& M0, const VertexSet& M1,
                    const VertexSet* C) {
  const int L = static_cast<int>(O.size());
  std::vector<int> pos;
  for (int i = 0; i < L; ++i) {
    if (contains(M0, O[i]) || contains(M1, O[i])) pos.push_back(i);
  }
  if (pos.size() < 2) return 0;
  int count = 0;
  for (std::size_t j = 0; j < pos.size(); ++j) {
    int s = pos[j], t = pos[(j + 1) % pos.size()];
    if (contains(M0, O[s]) == contains(M0, O[t])) continue;
    if (C == nullptr) {
      ++count;
      continue;
    }
    int inner = 0, in_c = 0;
    for (int i = (s + 1) % L; i != t; i = (i + 1) % L) {
      ++inner;
      if (contains(*C, O[i])) ++in_c;
    }
    if (in_c > 0) {
      // With N(C) inside M0 u M1, an M0-M1 subpath meeting C lies in C apart from its ends.
      if (in_c != inner) throw InvariantError("winding: M0-M1 subpath leaves C in its interior");
      ++count;
    }
  }
  return count;
}

void check_separator(const Graph& g, const VertexSet& M0, const VertexSet& M1, const VertexSet& C) {
  if (!set_intersection(M0, M1).empty()) throw InputError("M0 and M1 intersect");
  const VertexSet M = set_union(M0, M1);
  if (C.empty()) throw InputError("C is empty");
  if (!set_intersection(C, M).empty()) throw InputError("C meets M0 u M1");
  if (!is_connected(induced_subgraph(g, C).graph)) throw InputError("C is not connected");
  for (Vertex c : C) {
    for (Vertex w : g.neighbors(c)) {
      if (!contains(C, w) && !contains(M, w)) {
        throw InputError("C has neighbour " + std::to_string(w) + " outside M0 u M1");
      }
    }
  }
}

}  // namespace

int winding_number(const Graph& g, const std::vector<Vertex>& O, const VertexSet& M0,
                   const VertexSet& M1, const VertexSet& C) {
  if (!is_cycle_in(g, O)) throw InputError("winding_number: O is not a cycle of g");
  check_separator(g, M0, M1, C);
  return count_crossings(O, M0, M1, &C);
}

int crossing_count(const std::vector<Vertex>& O, const VertexSet& M0, const VertexSet& M1) {
  return count_crossings(O, M0, M1, nullptr);
}

bool is_geodesic_cycle(const Graph& g, const std::vector<Vertex>& O) {
  if (!is_cycle_in(g, O)) return false;
  QgConstant q = quasi_geodesic_constant(g, cycle_subgraph(O));
  return q.at_most(1);
}

namespace {

struct Shortcut {
  int length;
  Vertex u, x;
};

// Shortest path between two cycle vertices avoiding the rest of the cycle, if it beats the cycle.
std::optional<Shortcut> best_shortcut(const Graph& g, const std::vector<Vertex>& O) {
  const int L = static_cast<int>(O.size());
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < L; ++i) pos[O[i]] = i;
  std::optional<Shortcut> best;
  auto consider = [&](int len, Vertex u, Vertex x) {
    int gap = std::abs(pos[u] - pos[x]);
    int d_cycle = std::min(gap, L - gap);
    if (len >= d_cycle) return;
    Shortcut s{len, std::min(u, x), std::max(u, x)};
    if (!best || std::tie(s.length, s.u, s.x) < std::tie(best->length, best->u, best->x)) best = s;
  };
  std::vector<int> d(g.vertex_count());
  std::vector<Vertex> queue;
  for (Vertex u : O) {
    std::fill(d.begin(), d.end(), -1);
    queue.assign(1, u);
    d[u] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex y = queue[head];
      for (Vertex w : g.neighbors(y)) {
        if (pos[w] >= 0) {
          if (w != u) consider(d[y] + 1, u, w);
        } else if (d[w] < 0) {
          d[w] = d[y] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return best;
}

Path route_outside(const Graph& g, const std::vector<Vertex>& O, Vertex u, Vertex x) {
  VertexSet keep = set_difference(all_vertices(g), make_set(O));
  keep = set_union(keep, make_set({u, x}));
  InducedSubgraph sub = induced_subgraph(g, keep);
  Path local = *shortest_path(sub.graph, sub.to_local[u], sub.to_local[x]);
  for (auto& v : local.vertices) v = sub.to_host[v];
  return local;
}

}  // namespace

std::vector<Vertex> long_geodesic_cycle(const Graph& g, const Path& P, int r, const VertexSet& C,
                                        int m0, int m1) {
  if (!is_path_in(g, P)) throw InputError("long_geodesic_cycle: P is not a path of g");
  const int n = P.length();
  if (distance(g, P.front(), P.back()) != Distance(n)) {
    throw InputError("long_geodesic_cycle: P is not geodesic");
  }
  if (r < 0 || m0 < 0 || m1 < 0) throw InputError("long_geodesic_cycle: negative parameter");
  const int m = n - m0 - m1 - 2 * r;
  if (m <= 0) throw InputError("long_geodesic_cycle: m = n - m0 - m1 - 2r is not positive");

  DistanceRows from_p = distance_rows(g, P.vertices);
  auto in_ball = [&](Vertex w, int i) { int d = from_p.raw(i, w); return d >= 0 && d <= r; };
  const VertexSet U = ball(g, make_set(P.vertices), r);
  if (C.empty() || !set_intersection(C, U).empty()) {
    throw InputError("long_geodesic_cycle: C is empty or meets the balls around P");
  }
  if (!is_connected(induced_subgraph(g, C).graph)) throw InputError("long_geodesic_cycle: C is not connected");
  VertexSet N;
  for (Vertex c : C) {
    for (Vertex w : g.neighbors(c)) {
      if (contains(C, w)) continue;
      if (!contains(U, w)) throw InputError("long_geodesic_cycle: C is not a component of g minus the balls");
      N.push_back(w);
    }
  }
  N = make_set(std::move(N));
  VertexSet M0, M1;
  for (Vertex w : N) {
    for (int i = 0; i <= n; ++i) {
      if (!in_ball(w, i)) continue;
      if (i <= m0) {
        M0.push_back(w);
      } else if (i >= n - m1) {
        M1.push_back(w);
      } else {
        throw InputError("long_geodesic_cycle: C has a neighbour in a middle ball B_" + std::to_string(i));
      }
    }
  }
  M0 = make_set(std::move(M0));
  M1 = make_set(std::move(M1));
  if (M0.empty()) throw InputError("long_geodesic_cycle: C has no neighbour in the start balls");
  if (M1.empty()) throw InputError("long_geodesic_cycle: C has no neighbour in the end balls");
  if (!set_intersection(M0, M1).empty()) throw InvariantError("M0 and M1 intersect");

  // Shortest M0-M1 path through C: s -> M0 -> C ... C -> M1 -> t, no M-M edges.
  const VertexSet local_set = set_union(C, set_union(M0, M1));
  InducedSubgraph sub = induced_subgraph(g, local_set);
  const int k = sub.graph.vertex_count();
  Graph aux(k + 2);
  for (auto [a, b] : sub.graph.edges()) {
    if (contains(C, sub.to_host[a]) || contains(C, sub.to_host[b])) aux.add_edge(a, b);
  }
  for (Vertex x : M0) aux.add_edge(k, sub.to_local[x]);
  for (Vertex x : M1) aux.add_edge(k + 1, sub.to_local[x]);
  auto through = shortest_path(aux, k, k + 1);
  if (!through) throw InvariantError("no M0-M1 path through C");
  std::vector<Vertex> Q;
  for (std::size_t i = 1; i + 1 < through->vertices.size(); ++i) Q.push_back(sub.to_host[through->vertices[i]]);

  const VertexSet Pset = make_set(P.vertices);
  Path R0 = *shortest_path_to_set(g, Q.front(), Pset);
  Path R1 = *shortest_path_to_set(g, Q.back(), Pset);
  if (R0.length() != r || R1.length() != r) throw InvariantError("attachment paths do not have length r");
  auto index_of = [&](Vertex v) {
    return static_cast<int>(std::find(P.vertices.begin(), P.vertices.end(), v) - P.vertices.begin());
  };
  const int a = index_of(R0.back()), b = index_of(R1.back());
  std::vector<Vertex> O;
  for (int i = R0.length(); i >= 1; --i) O.push_back(R0.vertices[i]);
  O.insert(O.end(), Q.begin(), Q.end());
  O.insert(O.end(), R1.vertices.begin() + 1, R1.vertices.end());
  if (a < b) {
    for (int i = b - 1; i > a; --i) O.push_back(P.vertices[i]);
  } else {
    for (int i = b + 1; i < a; ++i) O.push_back(P.vertices[i]);
  }
  if (!is_cycle_in(g, O)) throw InvariantError("initial cycle is not a cycle");
  if (count_crossings(O, M0, M1, &C) % 2 != 1) throw InvariantError("initial cycle has even winding number");

  while (auto sc = best_shortcut(g, O)) {
    Path q = route_outside(g, O, sc->u, sc->x);
    const int L = static_cast<int>(O.size());
    const int pu = static_cast<int>(std::find(O.begin(), O.end(), sc->u) - O.begin());
    const int px = static_cast<int>(std::find(O.begin(), O.end(), sc->x) - O.begin());
    std::vector<Vertex> o2, o3;
    for (int i = pu; i != px; i = (i + 1) % L) o2.push_back(O[i]);
    o2.push_back(O[px]);
    for (int i = q.length() - 1; i >= 1; --i) o2.push_back(q.vertices[i]);
    for (int i = px; i != pu; i = (i + 1) % L) o3.push_back(O[i]);
    o3.push_back(O[pu]);
    for (int i = 1; i < q.length(); ++i) o3.push_back(q.vertices[i]);
    const bool odd2 = count_crossings(o2, M0, M1, &C) % 2 == 1;
    const bool odd3 = count_crossings(o3, M0, M1, &C) % 2 == 1;
    if (!odd2 && !odd3) throw InvariantError("shortening produced no odd child cycle");
    if (odd2 && (!odd3 || o2.size() <= o3.size())) {
      O = std::move(o2);
    } else {
      O = std::move(o3);
    }
  }
  if (!is_geodesic_cycle(g, O)) throw InvariantError("long_geodesic_cycle: result is not geodesic");
  if (static_cast<int>(O.size()) < 2 * m) throw InvariantError("long_geodesic_cycle: result shorter than 2m");
  return O;
}

}  // namespace radial
