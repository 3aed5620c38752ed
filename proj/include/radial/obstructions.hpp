#ifndef RADIAL_OBSTRUCTIONS_HPP
#define RADIAL_OBSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radial/graph.hpp"
#include "radial/metric.hpp"

namespace radial {

enum class Pattern { K3, K13, W };

std::string pattern_name(Pattern p);
std::optional<Pattern> parse_pattern(const std::string& s);
// Edges are listed with u < v in a fixed order; branch paths follow that order.
Graph pattern_graph(Pattern p);
std::vector<Pattern> forbidden_patterns(GraphClass cls);

struct SubdivisionWitness {
  Pattern pattern = Pattern::K3;
  std::vector<Vertex> branch_vertices;  // pattern vertex -> host vertex
  std::vector<Path> branch_paths;       // pattern edge (u, v) -> path from image(u) to image(v)
  std::int64_t k = 0;
  std::int64_t c = 1;

  friend bool operator==(const SubdivisionWitness&, const SubdivisionWitness&) = default;
};

struct WitnessReport {
  bool ok = true;
  std::vector<std::string> violations;
};

WitnessReport verify_witness(const Graph& g, const SubdivisionWitness& w);

Subgraph witness_subgraph(const SubdivisionWitness& w);

// Fills in the tightest k and c for the given branch structure.
SubdivisionWitness make_witness(const Graph& g, Pattern p, std::vector<Vertex> branch,
                                std::vector<Path> paths);

// Branch vertices at positions 0, floor(L/3), floor(2L/3) of the cycle.
SubdivisionWitness witness_from_cycle(const Graph& g, const std::vector<Vertex>& cycle);

struct LowerBounds {
  Rational standalone;  // k / 4
  Rational host;        // k / (12 c)
};

LowerBounds lower_bounds(const Graph& g, const SubdivisionWitness& w);

int winding_number(const Graph& g, const std::vector<Vertex>& cycle, const VertexSet& M0,
                   const VertexSet& M1, const VertexSet& C);

// Number of M0-M1 subpaths of the cycle, regardless of C.
int crossing_count(const std::vector<Vertex>& cycle, const VertexSet& M0, const VertexSet& M1);

std::vector<Vertex> long_geodesic_cycle(const Graph& g, const Path& P, int r, const VertexSet& C,
                                        int m0, int m1);

bool is_geodesic_cycle(const Graph& g, const std::vector<Vertex>& cycle);

struct SearchCaps {
  std::int64_t max_candidates = 200000;
};

struct SearchResult {
  enum class Status { found, exhausted, cap_hit } status = Status::exhausted;
  std::optional<SubdivisionWitness> witness;
};

SearchResult find_subdivision(const Graph& g, Pattern p, std::int64_t k, std::int64_t c,
                              const SearchCaps& caps = {});

}  // namespace radial

#endif
