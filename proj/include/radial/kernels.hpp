#ifndef RADIAL_KERNELS_HPP
#define RADIAL_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "radial/graph.hpp"

namespace radial {

enum class Execution { serial, parallel };

// BFS rows from a list of sources: row i holds distances from sources[i].
// Entries are -1 for unreachable vertices.
class DistanceRows {
 public:
  DistanceRows() = default;
  DistanceRows(std::vector<Vertex> sources, int n);

  int row_count() const { return static_cast<int>(sources_.size()); }
  int column_count() const { return n_; }
  const std::vector<Vertex>& sources() const { return sources_; }

  int raw(int row, Vertex v) const { return data_[static_cast<std::size_t>(row) * n_ + v]; }
  int* row_data(int row) { return data_.data() + static_cast<std::size_t>(row) * n_; }
  const int* row_data(int row) const { return data_.data() + static_cast<std::size_t>(row) * n_; }
  Distance at(int row, Vertex v) const {
    int d = raw(row, v);
    return d < 0 ? Distance::infinity() : Distance(d);
  }

  friend bool operator==(const DistanceRows&, const DistanceRows&) = default;

 private:
  std::vector<Vertex> sources_;
  int n_ = 0;
  std::vector<int> data_;
};

DistanceRows distance_rows(const Graph& g, const std::vector<Vertex>& sources,
                           Execution exec = Execution::parallel);

// Full matrix; row index equals source vertex.
DistanceRows all_pairs_distances(const Graph& g, Execution exec = Execution::parallel);

// Largest finite distance and its lowest-index pair, or nullopt if g is disconnected/empty.
struct Diameter {
  int length = 0;
  Vertex u = 0;
  Vertex v = 0;
};
std::optional<Diameter> diameter(const DistanceRows& all_pairs);

}  // namespace radial

#endif
