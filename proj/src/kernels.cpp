#include "radial/kernels.hpp"

#include <omp.h>

namespace radial {

DistanceRows::DistanceRows(std::vector<Vertex> sources, int n)
    : sources_(std::move(sources)), n_(n), data_(sources_.size() * static_cast<std::size_t>(n), -1) {}

namespace {

void bfs_into(const Graph& g, Vertex s, int* dist, std::vector<Vertex>& queue) {
  queue.clear();
  dist[s] = 0;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

DistanceRows distance_rows(const Graph& g, const std::vector<Vertex>& sources, Execution exec) {
  for (Vertex s : sources) g.check(s);
  DistanceRows rows(sources, g.vertex_count());
  const int count = rows.row_count();
  if (exec == Execution::serial) {
    std::vector<Vertex> queue;
    for (int i = 0; i < count; ++i) bfs_into(g, sources[i], rows.row_data(i), queue);
    return rows;
  }
  // Rows are independent, so any schedule writes the same matrix.
#pragma omp parallel
  {
    std::vector<Vertex> queue;
    queue.reserve(g.vertex_count());
#pragma omp for schedule(dynamic, 8)
    for (int i = 0; i < count; ++i) bfs_into(g, sources[i], rows.row_data(i), queue);
  }
  return rows;
}

DistanceRows all_pairs_distances(const Graph& g, Execution exec) {
  std::vector<Vertex> all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
  return distance_rows(g, all, exec);
}

std::optional<Diameter> diameter(const DistanceRows& ap) {
  if (ap.row_count() == 0) return std::nullopt;
  Diameter best;
  bool first = true;
  for (int i = 0; i < ap.row_count(); ++i) {
    Vertex u = ap.sources()[i];
    for (Vertex v = 0; v < ap.column_count(); ++v) {
      int d = ap.raw(i, v);
      if (d < 0) return std::nullopt;
      if (u >= v) continue;
      if (first || d > best.length) {
        best = {d, u, v};
        first = false;
      }
    }
  }
  if (first) best = {0, ap.sources()[0], ap.sources()[0]};
  return best;
}

}  // namespace radial
