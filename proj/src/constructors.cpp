#include "radial/constructors.hpp"

#include <algorithm>

#include "construct_util.hpp"
#include "radial/kernels.hpp"
#include "radial/metric.hpp"

namespace radial {

namespace detail {

Balls::Balls(const Graph& g, const Path& path, int radius)
    : P(path), r(radius), rows(distance_rows(g, path.vertices)), covered(ball(g, make_set(path.vertices), radius)) {}

std::vector<int> Balls::indices(Vertex w) const {
  std::vector<int> out;
  for (int i = 0; i < rows.row_count(); ++i) {
    if (in(w, i)) out.push_back(i);
  }
  return out;
}

bool Attached::any_in(int lo, int hi) const {
  auto it = std::lower_bound(indices.begin(), indices.end(), lo);
  return it != indices.end() && *it <= hi;
}

VertexSet neighbourhood(const Graph& g, const VertexSet& C) {
  std::vector<Vertex> out;
  for (Vertex c : C) {
    for (Vertex w : g.neighbors(c)) {
      if (!contains(C, w)) out.push_back(w);
    }
  }
  return make_set(std::move(out));
}

std::vector<VertexSet> components_outside(const Graph& g, const VertexSet& removed) {
  InducedSubgraph rest = induced_subgraph(g, set_difference(all_vertices(g), removed));
  std::vector<VertexSet> out;
  for (auto& comp : components(rest.graph)) {
    for (auto& v : comp) v = rest.to_host[v];
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Attached> attached_components(const Graph& g, const Balls& balls) {
  std::vector<Attached> out;
  for (auto& comp : components_outside(g, balls.covered)) {
    Attached a{std::move(comp), {}, {}};
    a.neighbours = neighbourhood(g, a.vertices);
    for (Vertex w : a.neighbours) {
      auto idx = balls.indices(w);
      a.indices.insert(a.indices.end(), idx.begin(), idx.end());
    }
    a.indices = make_set(std::move(a.indices));
    out.push_back(std::move(a));
  }
  return out;
}

GraphDecomposition single_bag(const Graph& g) { return {Graph(1), {all_vertices(g)}}; }

GraphDecomposition to_host(const GraphDecomposition& dec, const InducedSubgraph& part) {
  GraphDecomposition out{dec.decomposition_graph, {}};
  for (const auto& bag : dec.bags) {
    VertexSet b;
    for (Vertex v : bag) b.push_back(part.to_host[v]);
    out.bags.push_back(make_set(std::move(b)));
  }
  return out;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

Obstructed promise(const Graph& g, SubdivisionWitness w, Pattern p, std::int64_t min_k,
                   std::int64_t max_c, const char* where) {
  const std::string tag(where);
  require(w.pattern == p, tag + ": unexpected witness pattern");
  require(w.k >= min_k, tag + ": witness subdivision parameter below the promised value");
  require(w.c <= max_c, tag + ": witness constant above the promised value");
  require(verify_witness(g, w).ok, tag + ": witness does not verify");
  return Obstructed{std::move(w)};
}

}  // namespace detail

using detail::require;

std::int64_t path_bound(int k) { return 18 * static_cast<std::int64_t>(k) + 2; }
std::int64_t cycle_bound(int k) { return 18 * static_cast<std::int64_t>(k) + 2; }
std::int64_t star_bound(int k) { return 72 * static_cast<std::int64_t>(k) + 14; }

BallDecomposition ball_decomposition(const Graph& g, const std::vector<Vertex>& X, int r) {
  if (X.empty()) throw InputError("ball_decomposition: X is empty");
  if (r < 0) throw InputError("ball_decomposition: negative radius");
  const VertexSet Xs = make_set(X);
  if (Xs.size() != X.size()) throw InputError("ball_decomposition: X repeats a vertex");
  for (Vertex x : X) g.check(x);
  const int k = static_cast<int>(X.size());
  Graph H(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(X[i], X[j])) H.add_edge(i, j);
    }
  }
  if (!is_connected(H)) throw InputError("ball_decomposition: g[X] is not connected");

  BallDecomposition out;
  out.c = ceil(quasi_geodesic_constant(g, Xs).value);
  const std::int64_t reach = out.c * r + (out.c + 1) / 2;
  out.bound = (out.c + 1) * r + (out.c + 1) / 2;
  std::vector<VertexSet> around(k);
  for (int i = 0; i < k; ++i) around[i] = ball(g, {X[i]}, r);
  out.dec.decomposition_graph = H;
  out.dec.bags.resize(k);
  for (int i = 0; i < k; ++i) {
    auto d = bfs(H, {i});
    std::vector<Vertex> acc;
    for (int j = 0; j < k; ++j) {
      if (d[j] >= 0 && d[j] <= reach) acc.insert(acc.end(), around[j].begin(), around[j].end());
    }
    out.dec.bags[i] = make_set(std::move(acc));
  }
  out.covered = ball(g, Xs, r);
  return out;
}

namespace {

void require_connected(const Graph& g, const char* who) {
  if (g.vertex_count() == 0) throw InputError(std::string(who) + ": empty graph");
  if (!is_connected(g)) throw InputError(std::string(who) + ": graph is disconnected");
}

struct PathResult {
  DecomposeOutcome outcome;
  std::vector<Vertex> cycle;  // set when the obstruction came from a long geodesic cycle
};

PathResult analyse_path(const Graph& g, int k) {
  require_connected(g, "decompose_path");
  if (k < 0) throw InputError("decompose_path: negative k");
  const Path P = longest_geodesic_path(g);
  const int n = P.length();
  if (n < 18 * k + 3) return {Decomposed{detail::single_bag(g), path_bound(k)}, {}};

  const int r = 3 * k;
  detail::Balls balls(g, P, r);
  const VertexSet Pset = make_set(P.vertices);

  // A vertex outside the balls next to a middle ball gives a claw.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (contains(balls.covered, v)) continue;
    int best = -1;
    for (Vertex w : g.neighbors(v)) {
      if (!contains(balls.covered, w)) continue;
      for (int i = r + 1; i < n - r; ++i) {
        if (balls.in(w, i) && (best < 0 || i < best)) best = i;
      }
    }
    if (best < 0) continue;
    Path Q = *shortest_path(g, v, P.vertices[best]);
    require(Q.length() == r + 1, "decompose_path: attachment path has the wrong length");
    certify_union(g, path_subgraph(P), 1, Q);
    auto w = make_witness(g, Pattern::K13, {P.vertices[best], P.front(), P.back(), v},
                          {P.subpath(0, best).reversed(), P.subpath(best, n), Q.reversed()});
    return {detail::promise(g, std::move(w), Pattern::K13, 3 * k, 3, "decompose_path"), {}};
  }

  auto comps = detail::attached_components(g, balls);
  for (const auto& C : comps) {
    if (C.any_in(0, r) && C.any_in(n - r, n)) {
      auto O = long_geodesic_cycle(g, P, r, C.vertices, r, r);
      require(static_cast<int>(O.size()) >= 12 * k + 6, "decompose_path: cycle too short");
      auto w = witness_from_cycle(g, O);
      return {detail::promise(g, std::move(w), Pattern::K3, 4 * k + 1, 1, "decompose_path"), O};
    }
  }

  const int reach = comps.empty() ? r : 9 * k;
  auto d = bfs(g, Pset);
  require(*std::max_element(d.begin(), d.end()) <= reach, "decompose_path: vertex far from P");
  BallDecomposition bd = ball_decomposition(g, P.vertices, reach);
  require(bd.c == 1, "decompose_path: P is not geodesic");
  require(bd.covered.size() == static_cast<std::size_t>(g.vertex_count()), "decompose_path: balls miss a vertex");
  return {Decomposed{std::move(bd.dec), path_bound(k)}, {}};
}

}  // namespace

DecomposeOutcome decompose_path(const Graph& g, int k) { return analyse_path(g, k).outcome; }

DecomposeOutcome decompose_cycle(const Graph& g, int k) {
  PathResult pr = analyse_path(g, k);
  if (auto* d = std::get_if<Decomposed>(&pr.outcome)) {
    const int N = d->dec.node_count();
    MinorModel model{cycle_graph(std::max(N + 1, 3)), {}};
    for (int i = 0; i < N; ++i) model.branch_sets.push_back({i});
    return Decomposed{transfer_along_minor(d->dec, model), cycle_bound(k)};
  }
  if (pr.cycle.empty()) return pr.outcome;  // claw passes through

  const std::vector<Vertex>& C = pr.cycle;
  const int L = static_cast<int>(C.size());
  const int r = 3 * k;
  BallDecomposition bd = ball_decomposition(g, C, r);
  require(bd.c == 1, "decompose_cycle: cycle is not geodesic");
  if (bd.covered.size() == static_cast<std::size_t>(g.vertex_count())) {
    return Decomposed{std::move(bd.dec), cycle_bound(k)};
  }
  Vertex v = -1;
  for (Vertex x = 0; x < g.vertex_count() && v < 0; ++x) {
    if (contains(bd.covered, x)) continue;
    for (Vertex w : g.neighbors(x)) {
      if (contains(bd.covered, w)) {
        v = x;
        break;
      }
    }
  }
  require(v >= 0, "decompose_cycle: no vertex next to the covered part");
  Path P = *shortest_path_to_set(g, v, make_set(C));
  require(P.length() == r + 1, "decompose_cycle: attachment path has the wrong length");
  const int pu = static_cast<int>(std::find(C.begin(), C.end(), P.back()) - C.begin());
  Path arc;
  for (int i = -(r + 1); i <= r + 1; ++i) arc.vertices.push_back(C[((pu + i) % L + L) % L]);
  require(quasi_geodesic_constant(g, path_subgraph(arc)).at_most(1), "decompose_cycle: arc is not geodesic");
  certify_union(g, path_subgraph(arc), 1, P);
  const int mid = r + 1;
  auto w = make_witness(g, Pattern::K13, {P.back(), arc.front(), arc.back(), v},
                        {arc.subpath(0, mid).reversed(), arc.subpath(mid, 2 * mid), P.reversed()});
  return detail::promise(g, std::move(w), Pattern::K13, 3 * k, 3, "decompose_cycle");
}

}  // namespace radial
