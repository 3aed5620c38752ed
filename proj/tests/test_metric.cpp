#include <doctest.h>

#include "radial/constructors.hpp"
#include "radial/generators.hpp"
#include "radial/metric.hpp"
#include "support.hpp"

using namespace radial;

namespace {

VertexSet grid_boundary(int k) {
  VertexSet out;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == 0 || j == 0 || i == k - 1 || j == k - 1) out.push_back(i * k + j);
    }
  }
  return out;
}

Rational reference_qg(const Graph& g, const Subgraph& s) {
  auto [num, den] = oracle::qg_constant(g, s.vertices, s.edges);
  return Rational(num, den);
}

}  // namespace

TEST_SUITE("metric") {

TEST_CASE("quasi-geodesic constant examples") {
  Graph grid = gen::grid(7, 7);
  auto p = *shortest_path(grid, 0, 48);
  CHECK(quasi_geodesic_constant(grid, path_subgraph(p)).value == Rational(1));
  auto b = quasi_geodesic_constant(gen::grid(5, 5), grid_boundary(5));
  CHECK_FALSE(b.infinite);
  CHECK(b.value == Rational(2));
  auto k4 = gen::complete(4);
  CHECK(quasi_geodesic_constant(k4, cycle_subgraph({0, 1, 2, 3})).value == Rational(2));
  CHECK(quasi_geodesic_constant(k4, VertexSet{2}).value == Rational(1));
  CHECK(quasi_geodesic_constant(gen::path(4), VertexSet{0, 4}).infinite);
  CHECK(ceil(Rational(7, 3)) == 3);
  CHECK(ceil(Rational(6, 3)) == 2);
  CHECK(to_string(Rational(7, 3)) == "7/3");
}

TEST_CASE("quasi-geodesic constant matches the brute-force reference") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    Graph g = oracle::random_connected(6 + t % 15, 0.25, rng);
    std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
    VertexSet X;
    for (int i = 0; i < 4 + t % 5; ++i) X.push_back(pick(rng));
    X = make_set(X);
    Subgraph s = induced_edges(g, X);
    auto q = quasi_geodesic_constant(g, s);
    auto [num, den] = oracle::qg_constant(g, s.vertices, s.edges);
    if (num == oracle::kInf) {
      CHECK(q.infinite);
    } else {
      CHECK_FALSE(q.infinite);
      CHECK(q.value == Rational(num, den));
    }
    CHECK((q.value == Rational(1) && !q.infinite) == (num == 1 && den == 1));
  }
}

TEST_CASE("one-path union: geodesic plus shortest attachment is 3-quasi-geodesic") {
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_connected(10 + t % 20, 0.12, rng);
    Path P = longest_geodesic_path(g);
    VertexSet Pset = make_set(P.vertices);
    for (Vertex v = 0; v < g.vertex_count(); v += 3) {
      auto Q = *shortest_path_to_set(g, v, Pset);
      auto cert = certify_union(g, path_subgraph(P), 1, Q);
      CHECK(cert.constant == 3);
      CHECK(reference_qg(g, cert.subgraph) <= Rational(3));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("one-path union: zero-length attachment") {
  Graph g = gen::path(5);
  Path P{{0, 1, 2, 3, 4, 5}};
  auto cert = certify_union(g, path_subgraph(P), 1, Path{{3}});
  CHECK(cert.constant == 3);
  CHECK(cert.subgraph.vertices == make_set(P.vertices));
}

TEST_CASE("one-path union rejects a non-shortest attachment") {
  Graph g = gen::cycle(10);
  Path P{{0, 1, 2, 3}};
  CHECK_THROWS_AS(certify_union(g, path_subgraph(P), 1, Path{{5, 6, 7, 8, 9, 0}}), PreconditionError);
}

TEST_CASE("two-path union on a comb, condition (i)") {
  // a path with two teeth attached far apart
  Graph comb = gen::path(40);
  Vertex a = comb.add_vertex(), b = comb.add_vertex();
  comb.add_edge(5, a);
  comb.add_edge(a, b);
  Vertex c = comb.add_vertex(), d = comb.add_vertex(), e = comb.add_vertex();
  comb.add_edge(30, c);
  comb.add_edge(c, d);
  comb.add_edge(d, e);
  Path P = longest_geodesic_path(comb);
  auto cert = certify_union(comb, P, *shortest_path(comb, b, 5), *shortest_path(comb, e, 30));
  CHECK(cert.constant == 3);
  CHECK(reference_qg(comb, cert.subgraph) <= Rational(3));

  Graph tight = gen::path(20);
  Vertex x = tight.add_vertex(), y = tight.add_vertex(), z = tight.add_vertex();
  tight.add_edge(8, x);
  tight.add_edge(x, y);
  tight.add_edge(11, z);
  CHECK_THROWS_AS(certify_union(tight, longest_geodesic_path(tight), *shortest_path(tight, y, 8),
                                *shortest_path(tight, z, 11)),
                  PreconditionError);
}

TEST_CASE("two-path union on a spider, condition (ii)") {
  // K_{1,3} with legs of length 20; R attaches to the middle of Q.
  Graph g = gen::subdivide(gen::star(3), 20);
  auto leg = [&](int l, int depth) { return depth == 0 ? 0 : (depth == 20 ? l + 1 : 4 + l * 19 + depth - 1); };
  Path P = *shortest_path(g, leg(0, 20), leg(1, 20));
  Path Q = *shortest_path(g, leg(2, 20), 0);
  Vertex t = g.add_vertex();
  g.add_edge(leg(2, 10), t);
  Path R{{t, leg(2, 10)}};
  // d(q, r) = 10 >= 4 max(d(t,Q)=1, d(p0,q)=20, d(pn,q)=20) fails
  CHECK_THROWS_AS(certify_union(g, P, Q, R), PreconditionError);
  // a short P passes
  Path shortP = *shortest_path(g, leg(0, 2), leg(1, 2));
  auto cert = certify_union(g, shortP, Q, R);
  CHECK(reference_qg(g, cert.subgraph) <= Rational(3));
}

TEST_CASE("two-path unions that pass the check are 3-quasi-geodesic") {
  std::mt19937_64 rng(13);
  int passed = 0;
  for (int t = 0; t < 4000 && passed < 40; ++t) {
    Graph g = oracle::random_connected(14 + t % 20, 0.02, rng);
    Path P = longest_geodesic_path(g);
    VertexSet Pset = make_set(P.vertices);
    std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
    Vertex u = pick(rng), v = pick(rng);
    if (contains(Pset, u) || contains(Pset, v)) continue;
    Path Q = *shortest_path_to_set(g, u, Pset);
    VertexSet PQ = set_union(Pset, make_set(Q.vertices));
    if (contains(PQ, v)) continue;
    Path R = *shortest_path_to_set(g, v, PQ);
    try {
      auto cert = certify_union(g, P, Q, R);
      CHECK(reference_qg(g, cert.subgraph) <= Rational(3));
      ++passed;
    } catch (const PreconditionError&) {
    }
  }
  CHECK(passed > 5);
}

TEST_CASE("verify_quasi_isometry") {
  Graph g = gen::grid(3, 4);
  QuasiIsometry id{{}, 1, 0, 1, 0, 0};
  for (Vertex v = 0; v < g.vertex_count(); ++v) id.phi.push_back(v);
  CHECK(verify_quasi_isometry(g, g, id).ok());

  const int rho = static_cast<int>(radius(g).value());
  const Vertex c = *center(g, all_vertices(g));
  QuasiIsometry point{{c}, 1, 0, 1, 0, rho};
  CHECK(verify_quasi_isometry(g, Graph(1), point).ok());
  point.r = rho - 1;
  auto rep = verify_quasi_isometry(g, Graph(1), point);
  CHECK_FALSE(rep.q3_ok);
  CHECK(rep.q1_ok);
}

TEST_CASE("dec_to_qi examples") {
  Graph g = gen::grid(4, 5);
  auto qi = dec_to_qi(g, {Graph(1), {all_vertices(g)}});
  CHECK(qi.r == radius(g).value());
  CHECK(verify_quasi_isometry(g, Graph(1), qi).ok());

  // edge bags around C6: outer width 1, spread 1
  Graph c6 = gen::cycle(6);
  GraphDecomposition edges{c6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}};
  auto iso = dec_to_qi(c6, edges);
  CHECK(iso == QuasiIsometry{{0, 1, 2, 3, 4, 0}, 2, 2, 2, 2, 1});
  CHECK(verify_quasi_isometry(c6, c6, iso).ok());
  CHECK(oracle::qi_ok(c6, c6, iso));

  Graph p = gen::path(20);
  std::vector<Vertex> X;
  for (Vertex v = 0; v <= 20; ++v) X.push_back(v);
  auto bd = ball_decomposition(p, X, 2);
  auto pq = dec_to_qi(p, bd.dec);
  auto m = metrics(p, bd.dec);
  CHECK(pq.r == m.outer_radial_width.value());
  CHECK(pq.a == 2 * m.radial_spread.value());
  CHECK(verify_quasi_isometry(p, bd.dec.decomposition_graph, pq).ok());
}

TEST_CASE("dec_to_qi rejects dishonest decompositions") {
  Graph g = gen::path(3);
  // nodes 1 and 2 are adjacent but their bags are disjoint
  GraphDecomposition dishonest{path_graph(3), {{0, 1, 2, 3}, {0, 1}, {2, 3}}};
  CHECK_THROWS_AS(dec_to_qi(g, dishonest), PreconditionError);
}

TEST_CASE("qi_to_dec examples") {
  Graph g = gen::cycle(7);
  QuasiIsometry id{{0, 1, 2, 3, 4, 5, 6}, 1, 0, 1, 0, 0};
  auto dec = qi_to_dec(g, g, id);
  CHECK(verify(g, dec).ok());
  for (Vertex v = 0; v < 7; ++v) CHECK(dec.bags[v] == make_set({(v + 6) % 7, v, (v + 1) % 7}));

  Graph star = gen::star(6);
  QuasiIsometry point{{0}, 1, 0, 1, 0, 1};
  auto one = qi_to_dec(star, Graph(1), point);
  CHECK(one.bags.size() == 1);
  CHECK(one.bags[0] == all_vertices(star));

  QuasiIsometry bad{{0}, 1, 0, 1, 0, 0};
  CHECK_THROWS_AS(qi_to_dec(star, Graph(1), bad), PreconditionError);
}

TEST_CASE("round trips meet the conversion bounds") {
  int checked = 0;
  for (const auto& [name, g] : oracle::corpus(17)) {
    if (g.vertex_count() > 40) continue;
    auto res = decompose_path(g, 1);
    auto* d = std::get_if<Decomposed>(&res);
    if (!d) continue;
    auto m = metrics(g, d->dec);
    if (!m.honest || !m.radial_spread.finite()) continue;
    CAPTURE(name);
    auto qi = dec_to_qi(g, d->dec);
    const Graph& h = d->dec.decomposition_graph;
    REQUIRE(verify_quasi_isometry(g, h, qi).ok());
    CHECK(verify_coarse_quasi_isometry(g, h, qi.phi, std::max(qi.m, qi.M), std::max({qi.a, qi.A, qi.r})));
    auto back = qi_to_dec(g, h, qi);
    CHECK(oracle::axioms_hold(g, back));
    auto bm = metrics(g, back);
    const std::int64_t node = qi.m * qi.r + (qi.m + qi.a + 1) / 2;
    CHECK(bm.outer_radial_width <= Distance(qi.r + qi.M * node + qi.A));
    CHECK(bm.radial_spread <= Distance(4 * qi.m * qi.r + qi.m + 2 * qi.a + 1));
    ++checked;
  }
  CHECK(checked > 20);
}

}
