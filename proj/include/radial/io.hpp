#ifndef RADIAL_IO_HPP
#define RADIAL_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "radial/decomposition.hpp"
#include "radial/graph.hpp"
#include "radial/metric.hpp"
#include "radial/obstructions.hpp"

namespace radial::io {

// Text formats. Blank lines and lines starting with '#' are ignored.
//
//   graph:          "n m", then m lines "u v"
//   decomposition:  "decomposition", the decomposition graph as above, then one line
//                   "bag h: v1 v2 ..." per node in node order
//   witness:        "witness <K3|K13|W> k c", one line "branch i v" per pattern vertex,
//                   then one line "path i j: v0 v1 ..." per pattern edge in pattern order
//   quasi-isometry: "qi m a M A r", then one line "h -> v" per node of H
//
// Parse errors throw InputError naming the source, the line and the rule broken.

Graph read_graph(std::istream& in, const std::string& source);
void write_graph(std::ostream& out, const Graph& g);

GraphDecomposition read_decomposition(std::istream& in, const std::string& source);
void write_decomposition(std::ostream& out, const GraphDecomposition& dec);

SubdivisionWitness read_witness(std::istream& in, const std::string& source);
void write_witness(std::ostream& out, const SubdivisionWitness& w);

QuasiIsometry read_qi(std::istream& in, const std::string& source);
void write_qi(std::ostream& out, const QuasiIsometry& qi);

using Certificate = std::variant<GraphDecomposition, SubdivisionWitness>;
Certificate read_certificate(std::istream& in, const std::string& source);

// Structure only: nodes labelled with their bags.
void write_dot(std::ostream& out, const GraphDecomposition& dec);

}  // namespace radial::io

#endif
