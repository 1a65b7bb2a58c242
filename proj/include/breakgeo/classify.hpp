#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "breakgeo/permutation.hpp"
#include "breakgeo/segment.hpp"

namespace breakgeo {

enum class AdjacencyClass { TwoFreeEnd, OneFreeEnd, TrivialSegment, ZeroFreeEnd };

std::string_view to_string(AdjacencyClass c);

struct ClassCounts {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  int delta = 0;

  int total() const { return alpha + beta + gamma + delta; }
  bool operator==(const ClassCounts&) const = default;
};

struct Classification {
  std::vector<AdjacencyClass> labels;
  ClassCounts counts;
};

AdjacencyClass classify_pair(PointClass a, PointClass b);

/// labels[i] is the class of {x_{i+1}, x_{i+2}} (0-based position i).
Classification classify(const Permutation& x, const SegmentSet& segments);

/// Counts only; classes indexed by value (classes[0] unused).
ClassCounts count_classes(std::span<const int> values, std::span<const PointClass> classes);

/// Two-free-end adjacencies of x, as runs of x.
SegmentSet free_core(const Permutation& x, const SegmentSet& segments);
/// n - 1 - |I| - |F(x,I)|
int deficiency(const Permutation& x, const SegmentSet& segments);

}  // namespace breakgeo
