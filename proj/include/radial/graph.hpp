#ifndef RADIAL_GRAPH_HPP
#define RADIAL_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radial {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
// Sorted, duplicate free.
using VertexSet = std::vector<Vertex>;

// Malformed or out-of-range input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Something the construction guarantees failed to hold; always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Distance {
 public:
  constexpr Distance() = default;
  constexpr Distance(std::int64_t v) : v_(v) {}  // NOLINT: implicit by design

  static constexpr Distance infinity() { return Distance(kInf); }

  constexpr bool finite() const { return v_ != kInf; }
  std::int64_t value() const {
    if (!finite()) throw std::domain_error("value() of infinite distance");
    return v_;
  }

  constexpr auto operator<=>(const Distance&) const = default;

  friend constexpr Distance operator+(Distance a, Distance b) {
    if (!a.finite() || !b.finite()) return infinity();
    return Distance(a.v_ + b.v_);
  }
  friend constexpr Distance operator*(std::int64_t k, Distance a) {
    if (!a.finite()) return k == 0 ? Distance(0) : infinity();
    return Distance(k * a.v_);
  }

  std::string to_string() const { return finite() ? std::to_string(v_) : "inf"; }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t v_ = 0;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  // Adding an existing edge is a no-op; loops and out-of-range endpoints throw.
  void add_edge(Vertex u, Vertex v);
  Vertex add_vertex();
  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[check(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  std::vector<Edge> edges() const;

  Vertex check(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int m_ = 0;
};

struct Path {
  std::vector<Vertex> vertices;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  Path reversed() const { return Path{{vertices.rbegin(), vertices.rend()}}; }
  // vertices[i..j], inclusive
  Path subpath(int i, int j) const;

  friend bool operator==(const Path&, const Path&) = default;
};

// A subgraph given explicitly by vertices and edges, not necessarily induced.
struct Subgraph {
  VertexSet vertices;
  std::vector<Edge> edges;  // normalized u < v, sorted, unique
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;  // local -> host
  std::vector<int> to_local;    // host -> local, -1 when absent
};

enum class GraphClass { path, cycle, star, tree };

VertexSet make_set(std::vector<Vertex> v);
bool contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet all_vertices(const Graph& g);

// Multi-source BFS; -1 marks unreachable vertices.
std::vector<int> bfs(const Graph& g, const std::vector<Vertex>& sources);

std::vector<Distance> distances(const Graph& g, Vertex source);
Distance distance(const Graph& g, Vertex u, Vertex v);
Distance radius(const Graph& g);
// Radius of U measured in g: least k with U inside some B_g(v, k).
Distance radius(const Graph& g, const VertexSet& U);
// Least index vertex v achieving radius(g, U); nullopt if U is empty or unbounded.
std::optional<Vertex> center(const Graph& g, const VertexSet& U);
VertexSet ball(const Graph& g, const VertexSet& X, int r);
VertexSet ball_closure(const Graph& g, const VertexSet& U, int k);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// Lexicographically least shortest path from s to t; nullopt if unreachable.
std::optional<Path> shortest_path(const Graph& g, Vertex s, Vertex t);
// Lexicographically least shortest path from s to the nearest vertex of X.
std::optional<Path> shortest_path_to_set(const Graph& g, Vertex s, const VertexSet& X);
Path longest_geodesic_path(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& X);
Subgraph induced_edges(const Graph& g, const VertexSet& X);
Subgraph path_subgraph(const Path& p);
Subgraph cycle_subgraph(const std::vector<Vertex>& cycle);
Subgraph subgraph_union(const Subgraph& a, const Subgraph& b);
Graph subgraph_as_graph(int n, const Subgraph& s);

bool is_path_in(const Graph& g, const Path& p);
bool is_cycle_in(const Graph& g, const std::vector<Vertex>& cycle);
bool belongs_to(const Graph& h, GraphClass cls);
std::string class_name(GraphClass cls);
std::optional<GraphClass> parse_class(const std::string& s);

}  // namespace radial

#endif
