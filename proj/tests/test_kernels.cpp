#include <doctest.h>

#include "radial/generators.hpp"
#include "radial/kernels.hpp"
#include "support.hpp"

using namespace radial;

TEST_SUITE("kernels") {

TEST_CASE("parallel all-pairs rows equal the serial reference") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Graph g = oracle::random_connected(10 + 7 * t, 1.5 / (10 + 7 * t), rng);
    auto serial = all_pairs_distances(g, Execution::serial);
    auto parallel = all_pairs_distances(g, Execution::parallel);
    CHECK(serial == parallel);
  }
}

TEST_CASE("rows match Floyd-Warshall, with -1 for unreachable") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  auto rows = all_pairs_distances(g);
  auto fw = oracle::floyd(g);
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = 0; v < 5; ++v) {
      if (fw[u][v] == oracle::kInf) {
        CHECK(rows.raw(u, v) == -1);
        CHECK_FALSE(rows.at(u, v).finite());
      } else {
        CHECK(rows.raw(u, v) == fw[u][v]);
      }
    }
  }
  CHECK_FALSE(diameter(rows));
}

TEST_CASE("diameter picks the lowest pair") {
  auto d = diameter(all_pairs_distances(gen::cycle(8)));
  REQUIRE(d);
  CHECK(d->length == 4);
  CHECK(d->u == 0);
  CHECK(d->v == 4);
}

TEST_CASE("distance rows from a source list") {
  Graph g = gen::grid(4, 4);
  auto rows = distance_rows(g, {5, 0});
  CHECK(rows.row_count() == 2);
  CHECK(rows.raw(0, 15) == 4);
  CHECK(rows.raw(1, 15) == 6);
}

}
