#ifndef RADIAL_SRC_CONSTRUCT_UTIL_HPP
#define RADIAL_SRC_CONSTRUCT_UTIL_HPP

#include <string>
#include <vector>

#include "radial/constructors.hpp"
#include "radial/kernels.hpp"

namespace radial::detail {

// The r-balls B_i around the vertices p_i of a path.
struct Balls {
  Balls(const Graph& g, const Path& P, int r);

  bool in(Vertex w, int i) const {
    int d = rows.raw(i, w);
    return d >= 0 && d <= r;
  }
  std::vector<int> indices(Vertex w) const;

  const Path& P;
  int r;
  DistanceRows rows;
  VertexSet covered;  // union of the balls
};

// A component of g minus the balls with the sorted indices of balls its neighbourhood meets.
struct Attached {
  VertexSet vertices;
  VertexSet neighbours;
  std::vector<int> indices;

  bool any_in(int lo, int hi) const;  // some index in [lo, hi]
};

std::vector<Attached> attached_components(const Graph& g, const Balls& balls);

// Components of g - removed, as host vertex sets.
std::vector<VertexSet> components_outside(const Graph& g, const VertexSet& removed);

VertexSet neighbourhood(const Graph& g, const VertexSet& C);

GraphDecomposition single_bag(const Graph& g);

// Lifts a decomposition of an induced subgraph back to host indices.
GraphDecomposition to_host(const GraphDecomposition& dec, const InducedSubgraph& part);

void require(bool cond, const std::string& what);

// Checks a witness against the pattern and parameters the construction promises.
Obstructed promise(const Graph& g, SubdivisionWitness w, Pattern p, std::int64_t min_k,
                   std::int64_t max_c, const char* where);

}  // namespace radial::detail

#endif
