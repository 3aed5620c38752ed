#ifndef RADIAL_GENERATORS_HPP
#define RADIAL_GENERATORS_HPP

#include <map>
#include <string>
#include <vector>

#include "radial/graph.hpp"

namespace radial::gen {

// path n: vertices 0..n in order (n edges).
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
// star l: centre 0, leaves 1..l.
Graph star(int l);
// rows x cols, row-major.
Graph grid(int rows, int cols);
Graph triangle();
Graph claw();
// Edges (0,2) (1,2) (2,3) (3,4) (3,5); 2 and 3 have degree 3.
Graph wrench();

// Family name plus integer parameters, as used on the command line.
Graph basic(const std::string& family, const std::vector<int>& params);

// Each edge uv (u < v) becomes a path of lengths[uv] edges. New vertices are numbered from
// |V(g)| on, edge by edge in sorted order, each path listed from u towards v.
Graph subdivide(const Graph& g, const std::map<Edge, int>& lengths);
Graph subdivide(const Graph& g, int length);

struct Wheel {
  std::vector<int> sequence;  // edge indices leading here from the central wheel
  Vertex hub = -1;
  std::vector<Vertex> rim;    // v_0 .. v_{n-1}
};

struct TreeOfWheels {
  Graph graph;
  std::vector<Wheel> wheels;  // central wheel first, then by depth
};

// Rim edge e_i joins v_{i-1} and v_i (v_n = v_0). A child wheel at e_i has its v_1 on v_{i-1}
// and its v_0 on v_i; below depth 1 the edge e_1, shared with the parent, gets no child.
TreeOfWheels tree_of_wheels(int n, int d);

// Every edge gets 4R subdivision vertices, then v is split into adjacent u_e and v_e.
// u_e takes the branches towards the two lowest-indexed neighbours of v and keeps degree 3;
// v_e keeps the index of v and takes the rest. u_e is the last vertex.
Graph split_subdivide(const Graph& m, int R, Vertex v);

}  // namespace radial::gen

#endif
