#pragma once

#include <array>
#include <optional>
#include <vector>

#include "breakgeo/permutation.hpp"

namespace breakgeo {

struct LabeledEdge {
  Adjacency edge;
  int label = 0;  // 0 or 1
};

/// Asks for a permutation whose adjacency set holds every forced edge, draws
/// the rest from `optional`, and uses at least min_label[l] edges of label l.
struct AssemblyRequest {
  int n = 0;
  AdjacencySet forced;
  std::vector<LabeledEdge> optional;
  std::array<int, 2> min_label{0, 0};
};

/// Depth-first search over orderings of the forced pieces. Returns the first
/// permutation found, or nothing when none exists.
std::optional<Permutation> assemble_path(const AssemblyRequest& request);

}  // namespace breakgeo
