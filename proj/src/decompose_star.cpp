#include <algorithm>

#include "construct_util.hpp"
#include "radial/constructors.hpp"
#include "radial/metric.hpp"

namespace radial {

using detail::require;

namespace {

constexpr const char* kWhere = "decompose_star";

std::int64_t K(int k) { return k; }

// Vertices of comp adjacent to a ball with index in (lo, hi) exclusive; lowest (vertex, index).
std::optional<std::pair<Vertex, int>> lowest_attachment(const Graph& g, const detail::Balls& balls,
                                                        const VertexSet& outside, int lo, int hi) {
  for (Vertex v : outside) {
    int best = -1;
    for (Vertex w : g.neighbors(v)) {
      if (!contains(balls.covered, w)) continue;
      for (int i = std::max(lo + 1, 0); i < hi && i < balls.rows.row_count(); ++i) {
        if (balls.in(w, i) && (best < 0 || i < best)) best = i;
      }
    }
    if (best >= 0) return std::make_pair(v, best);
  }
  return std::nullopt;
}

Obstructed cycle_obstruction(const Graph& g, const Path& P, int r, const VertexSet& C, int m0, int m1,
                             int k) {
  auto O = long_geodesic_cycle(g, P, r, C, m0, m1);
  return detail::promise(g, witness_from_cycle(g, O), Pattern::K3, k, 1, kWhere);
}

// The star arm built for one far component D of g - B(P, 18k+4).
struct Arm {
  std::vector<VertexSet> bags;  // bags[i] for q_i, i = 0..m
  VertexSet boundary;           // vertices of D with a neighbour outside D
};

std::variant<Arm, Obstructed> build_arm(const Graph& g, const Path& P, const VertexSet& D, int k,
                                        int far) {
  const VertexSet Pset = make_set(P.vertices);
  const auto dP = bfs(g, P.vertices);
  Vertex q0 = D.front();
  for (Vertex x : D) {
    if (dP[x] > dP[q0]) q0 = x;
  }
  const Path Q = *shortest_path_to_set(g, q0, Pset);
  const int l = Q.length();
  const int t = static_cast<int>(std::find(P.vertices.begin(), P.vertices.end(), Q.back()) - P.vertices.begin());
  int m = -1;
  for (int i = 0; i <= l; ++i) {
    if (dP[Q.vertices[i]] > far) m = i;
  }
  require(m == l - far - 1, "decompose_star: unexpected last far index on Q");

  const int r = 3 * k;
  detail::Balls qb(g, Q, r);
  for (auto& C : detail::attached_components(g, qb)) {
    if (set_intersection(C.vertices, D).empty()) continue;
    if (C.any_in(r + 1, l - 12 * k - 4)) {
      // Prefer an attaching vertex inside D.
      std::optional<std::pair<Vertex, int>> at;
      for (const VertexSet& pool : {set_intersection(C.vertices, D), C.vertices}) {
        at = lowest_attachment(g, qb, pool, r, l - 12 * k - 3);
        if (at) break;
      }
      auto [y, j] = *at;
      Path R = *shortest_path(g, y, Q.vertices[j]);
      require(R.length() == r + 1, "decompose_star: arm attachment path has the wrong length");
      require(t - r - 1 >= 0 && t + r + 1 <= P.length(), "decompose_star: arm foot too close to an end of P");
      const int u_idx = j - r - 1;
      Path Pstar = P.subpath(t - r - 1, t + r + 1);
      Path Qstar = Q.subpath(u_idx, l);
      certify_union(g, Pstar, Qstar, R);
      auto w = make_witness(g, Pattern::W,
                            {Pstar.front(), Pstar.back(), Q.back(), Q.vertices[j], Q.vertices[u_idx], y},
                            {Pstar.subpath(0, r + 1), Pstar.subpath(r + 1, 2 * r + 2).reversed(),
                             Q.subpath(j, l).reversed(), Q.subpath(u_idx, j).reversed(), R.reversed()});
      return detail::promise(g, std::move(w), Pattern::W, 3 * K(k), 3, kWhere);
    }
    if (C.any_in(0, r) && C.any_in(l - 12 * k - 3, l)) {
      return cycle_obstruction(g, Q, r, C.vertices, r, 12 * k + 3, k);
    }
  }

  Arm arm;
  arm.bags.resize(m + 1);
  std::vector<VertexSet> around(l + 1);
  for (int j = 0; j <= l; ++j) around[j] = ball(g, {Q.vertices[j]}, r);
  for (int i = 0; i <= m; ++i) {
    std::vector<Vertex> acc;
    for (int j = std::max(0, i - r - 1); j <= std::min(l, i + r + 1); ++j) {
      acc.insert(acc.end(), around[j].begin(), around[j].end());
    }
    arm.bags[i] = set_intersection(make_set(std::move(acc)), D);
  }
  arm.bags[0] = set_union(arm.bags[0], set_difference(D, qb.covered));
  for (Vertex x : D) {
    for (Vertex w : g.neighbors(x)) {
      if (!contains(D, w)) {
        arm.boundary.push_back(x);
        break;
      }
    }
  }
  for (Vertex x : arm.boundary) require(contains(arm.bags[m], x), "decompose_star: boundary vertex misses the last arm bag");
  for (const auto& bag : arm.bags) {
    require(!(radius(g, bag) > Distance(std::max<std::int64_t>(12 * K(k), 6 * K(k) + 1))),
            "decompose_star: arm bag radius above its bound");
  }
  return arm;
}

}  // namespace

DecomposeOutcome decompose_star(const Graph& g, int k) {
  if (g.vertex_count() == 0) throw InputError("decompose_star: empty graph");
  if (!is_connected(g)) throw InputError("decompose_star: graph is disconnected");
  if (k < 0) throw InputError("decompose_star: negative k");
  const Path P = longest_geodesic_path(g);
  const int n = P.length();
  if (n < 58 * k + 10) return Decomposed{detail::single_bag(g), star_bound(k)};

  const int r = 3 * k;
  detail::Balls balls(g, P, r);
  const VertexSet Pset = make_set(P.vertices);
  const VertexSet outside = set_difference(all_vertices(g), balls.covered);
  const auto comps = detail::attached_components(g, balls);

  // Lowest middle ball with an outside neighbour.
  const int lo = 23 * k + 5, hi = n - 23 * k - 5;
  int s = -1;
  for (Vertex v : outside) {
    for (Vertex w : g.neighbors(v)) {
      if (!contains(balls.covered, w)) continue;
      for (int i = lo; i <= hi && (s < 0 || i < s); ++i) {
        if (balls.in(w, i)) s = i;
      }
    }
  }

  if (s < 0) {
    for (const auto& C : comps) {
      if (C.any_in(0, lo - 1) && C.any_in(n - lo + 1, n)) {
        return cycle_obstruction(g, P, r, C.vertices, lo - 1, lo - 1, k);
      }
    }
    auto d = bfs(g, P.vertices);
    require(*std::max_element(d.begin(), d.end()) <= 29 * k + 4, "decompose_star: vertex far from P");
    BallDecomposition bd = ball_decomposition(g, P.vertices, 29 * k + 4);
    require(bd.covered.size() == static_cast<std::size_t>(g.vertex_count()), "decompose_star: balls miss a vertex");
    return Decomposed{std::move(bd.dec), star_bound(k)};
  }

  // Attachments away from s, other than at the ends, give a wrench.
  const int gap = 12 * k + 3;
  std::optional<std::pair<Vertex, int>> far_at;
  for (Vertex v : outside) {
    int best = -1;
    for (Vertex w : g.neighbors(v)) {
      if (!contains(balls.covered, w)) continue;
      for (int t : balls.indices(w)) {
        bool away = (t > r && t < s - gap) || (t > s + gap && t < n - r);
        if (away && (best < 0 || t < best)) best = t;
      }
    }
    if (best >= 0) {
      far_at = std::make_pair(v, best);
      break;
    }
  }
  if (far_at) {
    Vertex u = -1;
    for (Vertex x : outside) {
      bool hit = false;
      for (Vertex w : g.neighbors(x)) hit = hit || (contains(balls.covered, w) && balls.in(w, s));
      if (hit) {
        u = x;
        break;
      }
    }
    auto [v, t] = *far_at;
    Path Q = *shortest_path(g, u, P.vertices[s]);
    Path R = *shortest_path(g, v, P.vertices[t]);
    require(Q.length() == r + 1 && R.length() == r + 1, "decompose_star: attachment path has the wrong length");
    const int a = std::min(s, t) - r - 1, b = std::max(s, t) + r + 1;
    Path Pp = P.subpath(a, b);
    certify_union(g, Pp, Q, R);
    // Pattern vertex 2 is p_s with pendants u and the P end beyond s; vertex 3 is p_t.
    const int is = s - a, it = t - a, last = Pp.length();
    Path s_end = is < it ? Pp.subpath(0, is) : Pp.subpath(is, last).reversed();
    Path t_end = is < it ? Pp.subpath(it, last) : Pp.subpath(0, it).reversed();
    Path mid = is < it ? Pp.subpath(is, it) : Pp.subpath(it, is).reversed();
    auto w = make_witness(g, Pattern::W, {u, s_end.front(), P.vertices[s], P.vertices[t], v, t_end.back()},
                          {Q, s_end, mid, R.reversed(), t_end});
    return detail::promise(g, std::move(w), Pattern::W, 3 * K(k), 3, kWhere);
  }

  // A component reaching two of the three attachment zones closes a long geodesic cycle.
  const int d_lo = s - gap, d_hi = s + gap;
  for (const auto& C : comps) {
    bool start = C.any_in(0, r), mid = C.any_in(d_lo, d_hi), end = C.any_in(n - r, n);
    if (start && mid) return cycle_obstruction(g, P, r, C.vertices, r, n - d_lo, k);
    if (mid && end) return cycle_obstruction(g, P, r, C.vertices, d_hi, r, k);
    if (start && end) return cycle_obstruction(g, P, r, C.vertices, r, r, k);
  }

  // Path part: P, its balls and the components hanging off the ends.
  VertexSet Vp = balls.covered;
  for (const auto& C : comps) {
    if (!C.any_in(d_lo, d_hi)) Vp = set_union(Vp, C.vertices);
  }
  InducedSubgraph Gp = induced_subgraph(g, Vp);
  std::vector<Vertex> Plocal;
  for (Vertex p : P.vertices) Plocal.push_back(Gp.to_local[p]);
  const int wide = 12 * k + 2;
  BallDecomposition bdp = ball_decomposition(Gp.graph, Plocal, wide);
  require(bdp.c == 1, "decompose_star: P is not geodesic in the path part");
  require(bdp.covered.size() == Vp.size(), "decompose_star: path part not covered");
  GraphDecomposition path_part = detail::to_host(bdp.dec, Gp);

  const int far = 18 * k + 4;
  const VertexSet Vpp = ball(g, Pset, far);
  VertexSet hub = set_union(path_part.bags[s], set_difference(Vpp, Vp));

  GraphDecomposition dec{path_part.decomposition_graph, path_part.bags};
  const auto dP = bfs(g, P.vertices);
  for (const VertexSet& D : detail::components_outside(g, Vpp)) {
    int depth = 0;
    for (Vertex x : D) depth = std::max(depth, dP[x]);
    if (depth < 24 * k + 5) {
      hub = set_union(hub, D);
      continue;
    }
    auto arm = build_arm(g, P, D, k, far);
    if (auto* ob = std::get_if<Obstructed>(&arm)) return std::move(*ob);
    Arm& A = std::get<Arm>(arm);
    hub = set_union(hub, make_set(A.boundary));
    const int base = dec.decomposition_graph.vertex_count();
    const int m = static_cast<int>(A.bags.size()) - 1;
    for (int i = 0; i <= m; ++i) {
      dec.decomposition_graph.add_vertex();
      dec.bags.push_back(A.bags[i]);
      if (i > 0) dec.decomposition_graph.add_edge(base + i - 1, base + i);
    }
    dec.decomposition_graph.add_edge(base + m, s);
  }
  dec.bags[s] = hub;

  for (const auto& bag : dec.bags) {
    require(!(radius(g, bag) > Distance(36 * K(k) + 7)), "decompose_star: bag radius above its bound");
  }
  require(verify(g, dec).ok(), "decompose_star: assembled decomposition does not verify");
  return Decomposed{center_rebag(g, dec), star_bound(k)};
}

}  // namespace radial
