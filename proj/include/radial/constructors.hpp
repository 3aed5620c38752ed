#ifndef RADIAL_CONSTRUCTORS_HPP
#define RADIAL_CONSTRUCTORS_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "radial/decomposition.hpp"
#include "radial/graph.hpp"
#include "radial/obstructions.hpp"

namespace radial {

struct Decomposed {
  GraphDecomposition dec;
  std::int64_t claimed_bound = 0;
};

struct Obstructed {
  SubdivisionWitness witness;
};

using DecomposeOutcome = std::variant<Decomposed, Obstructed>;

struct BallDecomposition {
  GraphDecomposition dec;  // bags in host indices; node i of H is X[i]
  VertexSet covered;       // B_g(X, r)
  std::int64_t c = 1;      // ceiling of the quasi-geodesic constant of g[X]
  std::int64_t bound = 0;  // (c+1) r + ceil(c/2)
};

// X is taken in the given order: H = g[X] with node i standing for X[i].
BallDecomposition ball_decomposition(const Graph& g, const std::vector<Vertex>& X, int r);

DecomposeOutcome decompose_path(const Graph& g, int k);
DecomposeOutcome decompose_cycle(const Graph& g, int k);
DecomposeOutcome decompose_star(const Graph& g, int k);

std::int64_t path_bound(int k);   // 18k + 2
std::int64_t cycle_bound(int k);  // 18k + 2
std::int64_t star_bound(int k);   // 72k + 14

}  // namespace radial

#endif
