#include "radial/metric.hpp"

#include <algorithm>
#include <sstream>

#include "radial/kernels.hpp"

namespace radial {

std::int64_t ceil(const Rational& q) {
  std::int64_t n = q.numerator(), d = q.denominator();  // d > 0
  return n >= 0 ? (n + d - 1) / d : -((-n) / d);
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

QgConstant quasi_geodesic_constant(const Graph& g, const Subgraph& X) {
  for (Vertex v : X.vertices) g.check(v);
  QgConstant out;
  const int k = static_cast<int>(X.vertices.size());
  if (k <= 1) return out;
  InducedSubgraph index = induced_subgraph(g, X.vertices);
  Graph local(k);
  for (auto [u, v] : X.edges) {
    if (!g.adjacent(u, v)) throw InputError("subgraph edge is not an edge of the host");
    int a = index.to_local[u], b = index.to_local[v];
    if (a < 0 || b < 0) throw InputError("subgraph edge endpoint outside its vertex set");
    local.add_edge(a, b);
  }
  DistanceRows host = distance_rows(g, X.vertices);
  DistanceRows inner = all_pairs_distances(local);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      int dx = inner.raw(i, j);
      int dg = host.raw(i, X.vertices[j]);
      if (dx < 0) {
        out.infinite = true;
        out.u = X.vertices[i];
        out.v = X.vertices[j];
        return out;
      }
      Rational q(dx, dg);
      if (out.u < 0 || q > out.value) {
        out.value = q;
        out.u = X.vertices[i];
        out.v = X.vertices[j];
      }
    }
  }
  return out;
}

QgConstant quasi_geodesic_constant(const Graph& g, const VertexSet& X) {
  for (Vertex v : X) g.check(v);
  return quasi_geodesic_constant(g, induced_edges(g, make_set(X)));
}

namespace {

int dist_to(const Graph& g, Vertex s, const VertexSet& X) { return bfs(g, X)[g.check(s)]; }

// p is a shortest path from its first vertex to target, meeting target only at its end.
void check_attachment(const Graph& g, const Path& p, const VertexSet& target, const char* name) {
  if (!is_path_in(g, p)) throw PreconditionError(std::string(name) + " is not a path in g");
  if (!contains(target, p.back())) {
    throw PreconditionError(std::string(name) + " does not end on its target");
  }
  for (int i = 0; i + 1 < static_cast<int>(p.vertices.size()); ++i) {
    if (contains(target, p.vertices[i])) {
      throw PreconditionError(std::string(name) + " meets its target before its end");
    }
  }
  if (dist_to(g, p.front(), target) != p.length()) {
    throw PreconditionError(std::string(name) + " is not a shortest path to its target");
  }
}

UnionCertificate finish(const Graph& g, Subgraph s, std::int64_t bound, const char* what) {
  UnionCertificate cert{std::move(s), bound, {}};
  cert.measured = quasi_geodesic_constant(g, cert.subgraph);
  if (!cert.measured.at_most(bound)) {
    throw InvariantError(std::string(what) + ": union measured above the certified constant " +
                         std::to_string(bound));
  }
  return cert;
}

}  // namespace

UnionCertificate certify_union(const Graph& g, const Subgraph& X, std::int64_t c, const Path& p) {
  if (c < 1) throw PreconditionError("certify_union: c must be positive");
  if (!quasi_geodesic_constant(g, X).at_most(c)) {
    throw PreconditionError("certify_union: X is not " + std::to_string(c) + "-quasi-geodesic");
  }
  check_attachment(g, p, X.vertices, "attachment path");
  return finish(g, subgraph_union(X, path_subgraph(p)), 2 * c + 1, "one-path union");
}

UnionCertificate certify_union(const Graph& g, const Path& p, const Path& q, const Path& r) {
  if (!is_path_in(g, p)) throw PreconditionError("certify_union: P is not a path in g");
  if (distance(g, p.front(), p.back()) != Distance(p.length())) {
    throw PreconditionError("certify_union: P is not geodesic");
  }
  const VertexSet P = make_set(p.vertices);
  check_attachment(g, q, P, "Q");
  const VertexSet Q = make_set(q.vertices);
  const VertexSet PQ = set_union(P, Q);
  check_attachment(g, r, PQ, "R");

  const Vertex u = q.front(), v = r.front(), qe = q.back(), re = r.back();
  const std::int64_t d_qr = distance(g, qe, re).value();
  bool ok = false;
  std::ostringstream why;
  if (contains(P, re)) {
    std::int64_t rhs = 4 * std::max(dist_to(g, u, P), dist_to(g, v, P));
    ok = d_qr >= rhs;
    if (!ok) why << "condition (i) fails: dist(q,r)=" << d_qr << " < 4 max(dist(u,P), dist(v,P))=" << rhs;
  } else {
    std::int64_t rhs = 4 * std::max({static_cast<std::int64_t>(dist_to(g, v, Q)),
                                     distance(g, p.front(), qe).value(),
                                     distance(g, p.back(), qe).value()});
    ok = d_qr >= rhs;
    if (!ok) {
      why << "condition (ii) fails: dist(q,r)=" << d_qr
          << " < 4 max(dist(v,Q), dist(p0,q), dist(pn,q))=" << rhs;
    }
  }
  if (!ok) throw PreconditionError("certify_union: " + why.str());
  Subgraph s = subgraph_union(subgraph_union(path_subgraph(p), path_subgraph(q)), path_subgraph(r));
  return finish(g, std::move(s), 3, "two-path union");
}

QiReport verify_quasi_isometry(const Graph& g, const Graph& h, const QuasiIsometry& qi) {
  if (static_cast<int>(qi.phi.size()) != h.vertex_count()) {
    throw InputError("quasi-isometry map is not total on H");
  }
  for (Vertex x : qi.phi) g.check(x);
  if (qi.m < 1 || qi.M < 1 || qi.a < 0 || qi.A < 0 || qi.r < 0) {
    throw InputError("quasi-isometry parameters out of range");
  }
  QiReport rep;
  const int nh = h.vertex_count();
  DistanceRows dh = all_pairs_distances(h);
  DistanceRows dg = distance_rows(g, qi.phi);
  auto note = [&rep](const std::string& s) {
    if (rep.violations.size() < 20) rep.violations.push_back(s);
  };
  for (int x = 0; x < nh; ++x) {
    for (int y = x + 1; y < nh; ++y) {
      Distance dH = dh.at(x, y);
      Distance dG = dg.at(x, qi.phi[y]);
      if (dH > qi.m * dG + Distance(qi.a)) {
        rep.q1_ok = false;
        note("Q1: nodes " + std::to_string(x) + "," + std::to_string(y) + ": d_H=" +
             dH.to_string() + " > m*d_G+a with d_G=" + dG.to_string());
      }
      if (dG > qi.M * dH + Distance(qi.A)) {
        rep.q2_ok = false;
        note("Q2: nodes " + std::to_string(x) + "," + std::to_string(y) + ": d_G=" +
             dG.to_string() + " > M*d_H+A with d_H=" + dH.to_string());
      }
    }
  }
  auto d = bfs(g, qi.phi);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (d[v] < 0 || d[v] > qi.r) {
      rep.q3_ok = false;
      note("Q3: vertex " + std::to_string(v) + " is farther than r from the image");
    }
  }
  return rep;
}

bool verify_coarse_quasi_isometry(const Graph& g, const Graph& h, const std::vector<Vertex>& phi,
                                  std::int64_t K, std::int64_t C) {
  if (static_cast<int>(phi.size()) != h.vertex_count()) return false;
  DistanceRows dh = all_pairs_distances(h);
  DistanceRows dg = distance_rows(g, phi);
  for (int x = 0; x < h.vertex_count(); ++x) {
    for (int y = x + 1; y < h.vertex_count(); ++y) {
      Distance dH = dh.at(x, y), dG = dg.at(x, phi[y]);
      if (dH > K * dG + Distance(K * C)) return false;
      if (dG > K * dH + Distance(C)) return false;
    }
  }
  auto d = bfs(g, phi);
  return std::all_of(d.begin(), d.end(), [C](int x) { return x >= 0 && x <= C; });
}

QuasiIsometry dec_to_qi(const Graph& g, const GraphDecomposition& dec) {
  DecompositionMetrics m = metrics(g, dec);
  if (!m.honest) throw PreconditionError("dec_to_qi: decomposition is not honest");
  if (!m.outer_radial_width.finite()) throw PreconditionError("dec_to_qi: outer radial width is infinite");
  if (!m.radial_spread.finite()) throw PreconditionError("dec_to_qi: radial spread is infinite");
  QuasiIsometry qi;
  for (int h = 0; h < dec.node_count(); ++h) {
    auto c = center(g, dec.bags[h]);
    if (!c) throw PreconditionError("dec_to_qi: bag of node " + std::to_string(h) + " is empty");
    qi.phi.push_back(*c);
  }
  const std::int64_t r0 = m.outer_radial_width.value(), r1 = m.radial_spread.value();
  qi.m = std::max<std::int64_t>(2 * r1, 1);
  qi.a = 2 * r1;
  qi.M = std::max<std::int64_t>(2 * r0, 1);
  qi.A = 2 * r0;
  qi.r = r0;
  return qi;
}

std::int64_t qi_node_radius(const QuasiIsometry& qi) {
  return qi.m * qi.r + (qi.m + qi.a + 1) / 2;
}

GraphDecomposition qi_to_dec(const Graph& g, const Graph& h, const QuasiIsometry& qi) {
  QiReport rep = verify_quasi_isometry(g, h, qi);
  if (!rep.ok()) throw PreconditionError("qi_to_dec: " + rep.violations.front());
  const std::int64_t R = qi_node_radius(qi);
  std::vector<VertexSet> around(h.vertex_count());
  for (int x = 0; x < h.vertex_count(); ++x) around[x] = ball(g, {qi.phi[x]}, static_cast<int>(qi.r));
  GraphDecomposition dec{h, std::vector<VertexSet>(h.vertex_count())};
  for (int x = 0; x < h.vertex_count(); ++x) {
    auto d = bfs(h, {x});
    std::vector<Vertex> acc;
    for (int y = 0; y < h.vertex_count(); ++y) {
      if (d[y] >= 0 && d[y] <= R) acc.insert(acc.end(), around[y].begin(), around[y].end());
    }
    dec.bags[x] = make_set(std::move(acc));
  }
  return dec;
}

}  // namespace radial
