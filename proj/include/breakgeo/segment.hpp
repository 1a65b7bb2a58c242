#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "breakgeo/permutation.hpp"
#include "breakgeo/rational.hpp"

namespace breakgeo {

/// A run of >= 2 distinct points, stored with the smaller endpoint first.
class Segment {
 public:
  explicit Segment(std::vector<int> points);

  const std::vector<int>& points() const { return points_; }
  int length() const { return static_cast<int>(points_.size()) - 1; }
  int front() const { return points_.front(); }
  int back() const { return points_.back(); }
  int min_point() const;
  std::vector<Adjacency> adjacencies() const;
  std::string to_string() const;

  auto operator<=>(const Segment&) const = default;

 private:
  std::vector<int> points_;
};

/// Pairwise strongly disjoint segments over [n], sorted by minimum point.
class SegmentSet {
 public:
  SegmentSet() = default;
  SegmentSet(int n, std::vector<Segment> segments);

  static SegmentSet empty(int n) { return SegmentSet(n, {}); }

  int n() const { return n_; }
  const std::vector<Segment>& segments() const { return segments_; }
  /// |I|
  int adjacency_count() const;
  /// ||I||
  int segment_count() const { return static_cast<int>(segments_.size()); }
  bool empty() const { return segments_.empty(); }
  AdjacencySet adjacencies() const;
  std::string to_string() const;

  bool operator==(const SegmentSet&) const = default;
  auto operator<=>(const SegmentSet&) const = default;

 private:
  int n_ = 0;
  std::vector<Segment> segments_;
};

/// "[2,3,9,4];[5,6]"; whitespace ignored, empty text is the empty set.
SegmentSet parse_segment_set(std::string_view text, int n);

/// Splits a linear forest into its paths. Fails on a vertex of degree > 2 or a cycle.
SegmentSet segment_set_from_adjacencies(int n, const AdjacencySet& pairs);

/// Maximal runs of pi made of adjacencies in subset.
SegmentSet decompose(const Permutation& pi, const AdjacencySet& subset);

enum class PointClass { Intrinsic = 0, End = 1, Isolated = 2 };

inline int freedom(PointClass c) { return static_cast<int>(c); }

struct PointClasses {
  std::vector<int> end_points;
  std::vector<int> intrinsic_points;
  std::vector<int> isolated_points;
  /// of[v] for v in 1..n; of[0] unused.
  std::vector<PointClass> of;
};

PointClasses point_classes(const SegmentSet& segments);

SegmentSet complement_in(const Permutation& pi, const SegmentSet& segments);
/// Same runs as complement_in, in left-to-right order along pi.
std::vector<Segment> complement_runs(const Permutation& pi, const SegmentSet& segments);

BigInt count_segment_sets(int n, int m, int k);
Rational segment_count_probability(int n, int m, int k);

/// Segment set of id with m adjacencies. Without k the m adjacencies are a
/// uniform subset; with k the draw is uniform among sets with k segments.
SegmentSet sample_segment_set(int n, int m, std::optional<int> k, RandomStream& rng);

/// First segment of length m-k+1, then k-1 single adjacencies, packed from 1
/// with one unused adjacency between neighbours.
SegmentSet leftmost_segment_set(int n, int m, int k);

/// Calls fn on every m-adjacency segment set of id^(n), in bitmask order.
void for_each_identity_subset(int n, int m, const std::function<void(const SegmentSet&)>& fn);

/// Maps every point v to z(v).
SegmentSet relabel(const SegmentSet& segments, const Permutation& z);

}  // namespace breakgeo
