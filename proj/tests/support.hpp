#ifndef RADIAL_TESTS_SUPPORT_HPP
#define RADIAL_TESTS_SUPPORT_HPP

// Independent reference computations for tests. Nothing here calls the library's distance,
// radius, verification or quasi-geodesic code.

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "radial/decomposition.hpp"
#include "radial/generators.hpp"
#include "radial/graph.hpp"
#include "radial/metric.hpp"
#include "radial/obstructions.hpp"

namespace oracle {

using radial::Graph;
using radial::Vertex;

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Floyd-Warshall on an adjacency matrix.
std::vector<std::vector<int>> floyd(const Graph& g);

// Distances inside the subgraph with the given vertices and edges.
std::vector<std::vector<int>> floyd(int n, const std::vector<Vertex>& vertices,
                                    const std::vector<std::pair<Vertex, Vertex>>& edges);

// Radius of g[U] (kInf if disconnected, 0 if empty).
int part_radius(const Graph& g, const std::vector<Vertex>& U);
// Radius of U measured in g.
int outer_radius(const Graph& g, const std::vector<Vertex>& U);

bool axioms_hold(const Graph& g, const radial::GraphDecomposition& dec);
int width(const Graph& g, const radial::GraphDecomposition& dec);        // kInf if unbounded
int outer_width(const Graph& g, const radial::GraphDecomposition& dec);
int spread(const Graph& g, const radial::GraphDecomposition& dec);
bool honest(const radial::GraphDecomposition& dec);
// Q1-Q3 by Floyd-Warshall on both graphs.
bool qi_ok(const Graph& g, const Graph& h, const radial::QuasiIsometry& qi);

// max d_X(u,v) / d_G(u,v) as (num, den); num = kInf when X is disconnected.
std::pair<std::int64_t, std::int64_t> qg_constant(const Graph& g, const std::vector<Vertex>& vertices,
                                                  const std::vector<std::pair<Vertex, Vertex>>& edges);
bool qg_at_most(const Graph& g, const std::vector<Vertex>& vertices,
                const std::vector<std::pair<Vertex, Vertex>>& edges, std::int64_t c);

// Structure, disjointness, lengths and quasi-geodesic constant of a witness.
bool witness_ok(const Graph& g, const radial::SubdivisionWitness& w);

// Connected G(n, p) graph: a random spanning tree plus independent extra edges.
Graph random_connected(int n, double p, std::mt19937_64& rng);

struct Named {
  std::string name;
  Graph graph;
};

// Deterministic mixed corpus of connected graphs.
std::vector<Named> corpus(std::uint64_t seed);

}  // namespace oracle

#endif
