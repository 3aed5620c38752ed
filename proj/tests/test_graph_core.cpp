#include <doctest.h>

#include "radial/generators.hpp"
#include "radial/graph.hpp"
#include "support.hpp"

using namespace radial;

TEST_SUITE("graph_core") {

TEST_CASE("distances on small graphs") {
  auto d = distances(gen::path(3), 0);
  CHECK(d[0] == Distance(0));
  CHECK(d[3] == Distance(3));
  auto iso = distances(Graph(2), 0);
  CHECK_FALSE(iso[1].finite());
  CHECK(distance(gen::grid(5, 5), 0, 24) == Distance(8));
}

TEST_CASE("Distance arithmetic saturates") {
  Distance inf = Distance::infinity();
  CHECK_FALSE((inf + Distance(3)).finite());
  CHECK((Distance(2) + Distance(3)) == Distance(5));
  CHECK(Distance(7) < inf);
  CHECK(inf.to_string() == "inf");
}

TEST_CASE("radius") {
  CHECK(radius(gen::complete(4)) == Distance(1));
  CHECK(radius(Graph(0)) == Distance(0));
  CHECK(radius(gen::cycle(6)) == Distance(3));
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  CHECK_FALSE(radius(two).finite());
  CHECK(radius(gen::path(6), {0, 6}) == Distance(3));
}

TEST_CASE("ball") {
  CHECK(ball(gen::path(6), {3}, 1) == VertexSet{2, 3, 4});
  CHECK(ball(gen::cycle(8), {0, 4}, 2).size() == 8);
  Graph g = gen::grid(3, 4);
  CHECK(ball(g, {1, 7}, 0) == VertexSet{1, 7});
}

TEST_CASE("ball closure") {
  Graph p = gen::path(6);
  auto all = ball_closure(p, {0, 6}, 3);
  CHECK(all.size() == 7);
  CHECK(radius(induced_subgraph(p, all).graph) <= Distance(9));
  CHECK(ball_closure(p, {2}, 0) == VertexSet{2});
  auto c = ball_closure(gen::cycle(8), {0, 2}, 1);
  CHECK(c == VertexSet{0, 1, 2, 3, 7});
  CHECK(radius(induced_subgraph(gen::cycle(8), c).graph) == Distance(2));
}

TEST_CASE("longest geodesic path") {
  auto p = longest_geodesic_path(gen::path(9));
  CHECK(p.length() == 9);
  auto c = longest_geodesic_path(gen::cycle(8));
  CHECK(c.length() == 4);
  CHECK(distance(gen::cycle(8), c.front(), c.back()) == Distance(4));
  CHECK(longest_geodesic_path(gen::complete(5)).length() == 1);
}

TEST_CASE("components") {
  CHECK(components(gen::grid(3, 3)).size() == 1);
  Graph two(6);
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}) two.add_edge(u, v);
  auto cs = components(two);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == VertexSet{0, 1, 2});
  CHECK(cs[1] == VertexSet{3, 4, 5});
  CHECK(components(Graph(0)).empty());
}

TEST_CASE("distances agree with Floyd-Warshall on random graphs") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    Graph g = oracle::random_connected(5 + t, 2.0 / (5 + t), rng);
    auto fw = oracle::floyd(g);
    for (Vertex s = 0; s < g.vertex_count(); s += 3) {
      auto d = distances(g, s);
      for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(d[v] == Distance(fw[s][v]));
    }
    CHECK(radius(g) == Distance(oracle::outer_radius(g, all_vertices(g))));
    auto p = longest_geodesic_path(g);
    CHECK(is_path_in(g, p));
    int diam = 0;
    for (const auto& row : fw) {
      for (int x : row) diam = std::max(diam, x);
    }
    CHECK(p.length() == diam);
    CHECK(fw[p.front()][p.back()] == diam);
  }
}

TEST_CASE("shortest paths are lexicographically least") {
  Graph g = gen::cycle(6);
  auto p = shortest_path(g, 0, 3);
  REQUIRE(p);
  CHECK(p->vertices == std::vector<Vertex>{0, 1, 2, 3});
  auto q = shortest_path_to_set(gen::path(10), 0, {5, 7});
  REQUIRE(q);
  CHECK(q->back() == 5);
  CHECK(q->length() == 5);
}

TEST_CASE("class membership") {
  CHECK(belongs_to(gen::path(4), GraphClass::path));
  CHECK(belongs_to(gen::cycle(5), GraphClass::cycle));
  CHECK_FALSE(belongs_to(gen::cycle(5), GraphClass::tree));
  CHECK(belongs_to(gen::subdivide(gen::star(5), 3), GraphClass::star));
  CHECK_FALSE(belongs_to(gen::subdivide(gen::wrench(), 2), GraphClass::star));
  CHECK(belongs_to(gen::subdivide(gen::wrench(), 2), GraphClass::tree));
  CHECK(parse_class("cycle") == GraphClass::cycle);
  CHECK_FALSE(parse_class("blob"));
}

}
