#ifndef RADIAL_METRIC_HPP
#define RADIAL_METRIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "radial/decomposition.hpp"
#include "radial/graph.hpp"

namespace radial {

using Rational = boost::rational<std::int64_t>;

std::int64_t ceil(const Rational& q);
std::string to_string(const Rational& q);

// Max over pairs of dist_X / dist_G. For |X| <= 1 the value is 1.
struct QgConstant {
  bool infinite = false;
  Rational value{1};
  Vertex u = -1;  // a pair attaining the maximum (or disconnected in X)
  Vertex v = -1;

  bool at_most(std::int64_t c) const { return !infinite && value <= c; }
};

QgConstant quasi_geodesic_constant(const Graph& g, const VertexSet& X);
QgConstant quasi_geodesic_constant(const Graph& g, const Subgraph& X);

struct UnionCertificate {
  Subgraph subgraph;
  std::int64_t constant = 0;  // the certified bound (2c+1 or 3)
  QgConstant measured;
};

// X is c-quasi-geodesic and p is a shortest path from a vertex to X (ending in X).
UnionCertificate certify_union(const Graph& g, const Subgraph& X, std::int64_t c, const Path& p);

// p geodesic; q a shortest u-p path; r a shortest v-(p u q) path, under condition (i) or (ii).
UnionCertificate certify_union(const Graph& g, const Path& p, const Path& q, const Path& r);

struct QuasiIsometry {
  std::vector<Vertex> phi;  // node of H -> vertex of G
  std::int64_t m = 1, a = 0, M = 1, A = 0, r = 0;

  friend bool operator==(const QuasiIsometry&, const QuasiIsometry&) = default;
};

struct QiReport {
  bool q1_ok = true;
  bool q2_ok = true;
  bool q3_ok = true;
  std::vector<std::string> violations;

  bool ok() const { return q1_ok && q2_ok && q3_ok; }
};

QiReport verify_quasi_isometry(const Graph& g, const Graph& h, const QuasiIsometry& qi);

// Coarse (K, C) form: d_H <= K d_G + K C, d_G <= K d_H + C, image C-dense.
bool verify_coarse_quasi_isometry(const Graph& g, const Graph& h, const std::vector<Vertex>& phi,
                                  std::int64_t K, std::int64_t C);

QuasiIsometry dec_to_qi(const Graph& g, const GraphDecomposition& dec);
GraphDecomposition qi_to_dec(const Graph& g, const Graph& h, const QuasiIsometry& qi);

// The radius used around H-nodes in qi_to_dec: m r + ceil((m + a) / 2).
std::int64_t qi_node_radius(const QuasiIsometry& qi);

}  // namespace radial

#endif
