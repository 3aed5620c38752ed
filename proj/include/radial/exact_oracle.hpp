#ifndef RADIAL_EXACT_ORACLE_HPP
#define RADIAL_EXACT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "radial/decomposition.hpp"
#include "radial/graph.hpp"

namespace radial {

struct ExactCaps {
  int max_vertices = 10;
  std::int64_t max_steps = 5'000'000;  // search nodes per query
};

struct ExactResult {
  enum class Kind { at_most, exceeds_all, inconclusive } kind = Kind::inconclusive;
  std::optional<GraphDecomposition> dec;  // set for at_most
  std::string caps_hit;                   // set for inconclusive
};

// Is there a decomposition modelled on the class with radial width <= r?
ExactResult exact_width_at_most(const Graph& g, GraphClass cls, int r, const ExactCaps& caps = {});

struct ExactWidth {
  bool conclusive = false;
  int value = 0;        // the width when conclusive
  int lower_bound = 0;  // every r below this was ruled out
  std::string caps_hit;
};

ExactWidth exact_width(const Graph& g, GraphClass cls, const ExactCaps& caps = {});

}  // namespace radial

#endif
