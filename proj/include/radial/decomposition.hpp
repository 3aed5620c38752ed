#ifndef RADIAL_DECOMPOSITION_HPP
#define RADIAL_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "radial/graph.hpp"

namespace radial {

// The decomposition graph H with one bag per node of H.
struct GraphDecomposition {
  Graph decomposition_graph;
  std::vector<VertexSet> bags;

  int node_count() const { return decomposition_graph.vertex_count(); }
  friend bool operator==(const GraphDecomposition&, const GraphDecomposition&) = default;
};

struct DecompositionReport {
  bool h1_ok = true;
  bool h2_ok = true;
  bool all_bags_empty = false;
  std::vector<std::string> violations;

  bool ok() const { return h1_ok && h2_ok; }
};

struct DecompositionMetrics {
  Distance radial_width;
  Distance outer_radial_width;
  Distance radial_spread;
  bool honest = true;
};

// Checks bag/H consistency and both axioms; reports every violation found.
DecompositionReport verify(const Graph& g, const GraphDecomposition& dec);

DecompositionMetrics metrics(const Graph& g, const GraphDecomposition& dec);
Distance radial_width(const Graph& g, const GraphDecomposition& dec);

GraphDecomposition enlarge_bags(const Graph& g, const GraphDecomposition& dec, int r);

// V'_h = B(V_h, k) with k the outer radial width; radial width of the result is <= 2k.
GraphDecomposition center_rebag(const Graph& g, const GraphDecomposition& dec);

struct MinorModel {
  Graph host;
  std::vector<VertexSet> branch_sets;  // indexed by node of the decomposition graph
};

GraphDecomposition transfer_along_minor(const GraphDecomposition& dec, const MinorModel& model,
                                        bool require_faithful = true);

struct RestrictedDecomposition {
  InducedSubgraph part;         // g[X] with its vertex maps
  GraphDecomposition dec;       // bags in local indices of part.graph
};

RestrictedDecomposition restrict_to_quasi_geodesic(const Graph& g, const GraphDecomposition& dec,
                                                   const VertexSet& X, int c);

// Decomposition of g[X] obtained by keeping each bag's intersection with X, in local indices.
GraphDecomposition restrict_bags(const GraphDecomposition& dec, const InducedSubgraph& part);

// Sequential path graph 0 - 1 - ... - (n-1); cycle when n >= 3.
Graph path_graph(int nodes);
Graph cycle_graph(int nodes);

}  // namespace radial

#endif
