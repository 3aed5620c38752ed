#include "radial/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "radial/kernels.hpp"
#include "radial/metric.hpp"

namespace radial {

namespace {

void check_shape(const Graph& g, const GraphDecomposition& dec) {
  if (static_cast<int>(dec.bags.size()) != dec.node_count()) {
    throw InputError("decomposition has " + std::to_string(dec.bags.size()) + " bags for " +
                     std::to_string(dec.node_count()) + " nodes");
  }
  for (const auto& bag : dec.bags) {
    for (Vertex v : bag) g.check(v);
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      throw InputError("bag is not a sorted vertex set");
    }
  }
}

// nodes_of[v] = sorted list of nodes whose bag contains v
std::vector<std::vector<int>> node_sets(const Graph& g, const GraphDecomposition& dec) {
  std::vector<std::vector<int>> nodes_of(g.vertex_count());
  for (int h = 0; h < dec.node_count(); ++h) {
    for (Vertex v : dec.bags[h]) nodes_of[v].push_back(h);
  }
  return nodes_of;
}

bool connected_in(const Graph& h, const std::vector<int>& nodes) {
  if (nodes.empty()) return false;
  InducedSubgraph sub = induced_subgraph(h, nodes);
  return is_connected(sub.graph);
}

}  // namespace

DecompositionReport verify(const Graph& g, const GraphDecomposition& dec) {
  check_shape(g, dec);
  DecompositionReport rep;
  rep.all_bags_empty = std::all_of(dec.bags.begin(), dec.bags.end(),
                                   [](const VertexSet& b) { return b.empty(); });
  if (rep.all_bags_empty) rep.violations.push_back("note: every bag is empty");
  auto nodes_of = node_sets(g, dec);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (nodes_of[v].empty()) {
      rep.h1_ok = false;
      rep.h2_ok = false;
      rep.violations.push_back("H1: vertex " + std::to_string(v) + " lies in no bag");
    } else if (!connected_in(dec.decomposition_graph, nodes_of[v])) {
      rep.h2_ok = false;
      rep.violations.push_back("H2: nodes containing vertex " + std::to_string(v) +
                               " are disconnected in H");
    }
  }
  for (auto [u, v] : g.edges()) {
    std::vector<int> common;
    std::set_intersection(nodes_of[u].begin(), nodes_of[u].end(), nodes_of[v].begin(),
                          nodes_of[v].end(), std::back_inserter(common));
    if (common.empty()) {
      rep.h1_ok = false;
      rep.violations.push_back("H1: edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " lies in no bag");
    }
  }
  return rep;
}

Distance radial_width(const Graph& g, const GraphDecomposition& dec) {
  std::vector<Distance> per(dec.bags.size());
  const int count = dec.node_count();
#pragma omp parallel for schedule(dynamic, 1)
  for (int h = 0; h < count; ++h) {
    if (dec.bags[h].empty()) continue;
    per[h] = radius(induced_subgraph(g, dec.bags[h]).graph);
  }
  Distance w = 0;
  for (auto d : per) w = std::max(w, d);
  return w;
}

DecompositionMetrics metrics(const Graph& g, const GraphDecomposition& dec) {
  if (!verify(g, dec).ok()) throw PreconditionError("metrics: decomposition does not verify");
  DecompositionMetrics m;
  m.radial_width = radial_width(g, dec);

  DistanceRows gd = all_pairs_distances(g);
  auto set_radius = [](const DistanceRows& d, const std::vector<int>& U) -> Distance {
    if (U.empty()) return 0;
    Distance best = Distance::infinity();
    for (Vertex c = 0; c < d.column_count(); ++c) {
      Distance ecc = 0;
      for (Vertex u : U) ecc = std::max(ecc, d.at(c, u));
      best = std::min(best, ecc);
    }
    return best;
  };
  m.outer_radial_width = 0;
  for (const auto& bag : dec.bags) m.outer_radial_width = std::max(m.outer_radial_width, set_radius(gd, bag));

  DistanceRows hd = all_pairs_distances(dec.decomposition_graph);
  auto nodes_of = node_sets(g, dec);
  m.radial_spread = 0;
  for (const auto& nodes : nodes_of) m.radial_spread = std::max(m.radial_spread, set_radius(hd, nodes));

  m.honest = true;
  for (auto [h1, h2] : dec.decomposition_graph.edges()) {
    if (set_intersection(dec.bags[h1], dec.bags[h2]).empty()) m.honest = false;
  }
  return m;
}

GraphDecomposition enlarge_bags(const Graph& g, const GraphDecomposition& dec, int r) {
  if (!verify(g, dec).ok()) throw PreconditionError("enlarge_bags: decomposition does not verify");
  if (r < 0) throw InputError("enlarge_bags: negative radius");
  GraphDecomposition out{dec.decomposition_graph, {}};
  out.bags.reserve(dec.bags.size());
  for (const auto& bag : dec.bags) out.bags.push_back(ball(g, bag, r));
  return out;
}

GraphDecomposition center_rebag(const Graph& g, const GraphDecomposition& dec) {
  Distance k = metrics(g, dec).outer_radial_width;
  if (!k.finite()) throw PreconditionError("center_rebag: outer radial width is infinite");
  return enlarge_bags(g, dec, static_cast<int>(k.value()));
}

GraphDecomposition transfer_along_minor(const GraphDecomposition& dec, const MinorModel& model,
                                        bool require_faithful) {
  const Graph& H = dec.decomposition_graph;
  const Graph& Hp = model.host;
  if (static_cast<int>(model.branch_sets.size()) != H.vertex_count()) {
    throw InputError("minor model: branch set count differs from node count");
  }
  std::vector<int> owner(Hp.vertex_count(), -1);
  std::vector<std::string> problems;
  for (int h = 0; h < H.vertex_count(); ++h) {
    const auto& X = model.branch_sets[h];
    if (X.empty()) problems.push_back("branch set of node " + std::to_string(h) + " is empty");
    for (Vertex x : X) {
      Hp.check(x);
      if (owner[x] >= 0) {
        problems.push_back("branch sets of nodes " + std::to_string(owner[x]) + " and " +
                           std::to_string(h) + " overlap");
      }
      owner[x] = h;
    }
    if (!X.empty() && !is_connected(induced_subgraph(Hp, X).graph)) {
      problems.push_back("branch set of node " + std::to_string(h) + " is disconnected");
    }
  }
  std::vector<std::vector<int>> linked(H.vertex_count());
  for (auto [x, y] : Hp.edges()) {
    int a = owner[x], b = owner[y];
    if (a >= 0 && b >= 0 && a != b) {
      linked[a].push_back(b);
      linked[b].push_back(a);
    }
  }
  for (auto& l : linked) l = make_set(std::move(l));
  for (int a = 0; a < H.vertex_count(); ++a) {
    for (int b = a + 1; b < H.vertex_count(); ++b) {
      bool adj = H.adjacent(a, b), lk = contains(linked[a], b);
      if (adj && !lk) {
        problems.push_back("adjacent nodes " + std::to_string(a) + "-" + std::to_string(b) +
                           " have no edge between their branch sets");
      } else if (!adj && lk && require_faithful) {
        problems.push_back("non-adjacent nodes " + std::to_string(a) + "-" + std::to_string(b) +
                           " have an edge between their branch sets");
      }
    }
  }
  if (!problems.empty()) {
    std::string msg = "minor model invalid:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw InputError(msg);
  }
  GraphDecomposition out{Hp, std::vector<VertexSet>(Hp.vertex_count())};
  for (Vertex x = 0; x < Hp.vertex_count(); ++x) {
    if (owner[x] >= 0) out.bags[x] = dec.bags[owner[x]];
  }
  return out;
}

GraphDecomposition restrict_bags(const GraphDecomposition& dec, const InducedSubgraph& part) {
  GraphDecomposition out{dec.decomposition_graph, {}};
  for (const auto& bag : dec.bags) {
    VertexSet local;
    for (Vertex v : bag) {
      if (part.to_local[v] >= 0) local.push_back(part.to_local[v]);
    }
    out.bags.push_back(make_set(std::move(local)));
  }
  return out;
}

RestrictedDecomposition restrict_to_quasi_geodesic(const Graph& g, const GraphDecomposition& dec,
                                                   const VertexSet& X, int c) {
  if (c < 1) throw InputError("restrict_to_quasi_geodesic: c must be positive");
  if (!verify(g, dec).ok()) throw PreconditionError("restrict_to_quasi_geodesic: decomposition does not verify");
  Distance r = radial_width(g, dec);
  if (!r.finite()) throw PreconditionError("restrict_to_quasi_geodesic: radial width is infinite");
  QgConstant q = quasi_geodesic_constant(g, X);
  if (!q.at_most(c)) {
    std::ostringstream msg;
    msg << "restrict_to_quasi_geodesic: X is not " << c << "-quasi-geodesic; pair (" << q.u << ", "
        << q.v << ") has ratio " << (q.infinite ? std::string("inf") : to_string(q.value));
    throw PreconditionError(msg.str());
  }
  RestrictedDecomposition out;
  out.part = induced_subgraph(g, X);
  GraphDecomposition local = restrict_bags(dec, out.part);
  const int radius_x = static_cast<int>(c * r.value());
  for (auto& bag : local.bags) bag = ball(out.part.graph, bag, radius_x);
  out.dec = std::move(local);
  return out;
}

Graph path_graph(int nodes) {
  Graph h(nodes);
  for (int i = 1; i < nodes; ++i) h.add_edge(i - 1, i);
  return h;
}

Graph cycle_graph(int nodes) {
  Graph h = path_graph(nodes);
  if (nodes >= 3) h.add_edge(nodes - 1, 0);
  return h;
}

}  // namespace radial
