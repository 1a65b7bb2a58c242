#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "breakgeo/permutation.hpp"
#include "breakgeo/rational.hpp"
#include "breakgeo/segment.hpp"

namespace breakgeo {

inline constexpr int kDefaultExhaustiveN = 8;
inline constexpr int kDefaultSearchN = 12;

using GeodesicSet = ClassSet;

bool is_geodesic_point(const Permutation& pi, const Permutation& x, const Permutation& y);
/// A_{x,y} subset of A_pi subset of A_x union A_y.
bool satisfies_adjacency_sandwich(const Permutation& pi, const Permutation& x, const Permutation& y);

/// Bit (pair index) per unordered pair; valid for n <= 11.
using AdjMask = std::uint64_t;
inline constexpr int kMaskMaxN = 11;
int pair_index(int a, int b);
AdjMask adjacency_mask(std::span<const int> values);

/// All permutation classes of S_n, each with its adjacency mask.
struct ClassSpace {
  int n = 0;
  std::vector<Permutation> reps;
  std::vector<AdjMask> masks;
  std::unordered_map<AdjMask, int> index;

  int index_of(const Permutation& x) const;
  std::size_t size() const { return reps.size(); }
};

ClassSpace build_class_space(int n, int max_n = kDefaultExhaustiveN);

/// Indices of the classes on geodesics between classes a and b.
std::vector<int> geodesic_indices(const ClassSpace& space, int a, int b);

GeodesicSet enumerate_geodesic_points(const Permutation& x, const Permutation& y, int max_n = kDefaultExhaustiveN);

enum class CaseTag { I, II, III };
std::string_view to_string(CaseTag tag);

struct WitnessGeodesic {
  Permutation pi;
  SegmentSet j_set;
  CaseTag case_tag;
};

/// A witness pi with I in A_pi and A_pi \ I in A_x, or nothing.
std::optional<WitnessGeodesic> xn_membership(const Permutation& x, const SegmentSet& segments);

struct ComplementMatch {
  CaseTag case_tag;
  int q = 0;
  int r = 0;
};

/// Checks the End/Int/Iso set conditions of the three completion cases as
/// stated, with no connectivity requirement.
std::optional<ComplementMatch> match_complement_conditions(const SegmentSet& segments, const SegmentSet& j_set);
/// I and J are disjoint and their union is the adjacency set of one permutation.
bool completes_to_path(const SegmentSet& segments, const SegmentSet& j_set);

/// Empty when every witness invariant holds, otherwise one message per failure.
std::vector<std::string> validate_witness(const Permutation& x, const SegmentSet& segments, const WitnessGeodesic& w);

BigInt xn_exact_count(const SegmentSet& segments, int max_n = kDefaultExhaustiveN, int threads = 1);
/// Independent count: collects J = A_pi \ I over classes pi containing I and
/// tests containment of each J in every x of S_n.
BigInt xn_union_count(const SegmentSet& segments, int max_n = kDefaultExhaustiveN, int threads = 1);
/// Sum over distinct J of the number of permutations containing J.
BigInt xn_pair_count_oracle(const SegmentSet& segments, int max_n = kDefaultExhaustiveN);

/// Reference closed form for |X_n(I)|, evaluated as written; 0 when m = n-1.
BigInt xn_closed_form(int n, int m, int k);
/// 2^k (n-m)!
BigInt count_containing(int n, int m, int k);

struct FarGeodesic {
  bool exists = false;
  std::optional<Permutation> witness;
};

/// Minimum distance required at scale epsilon: ceil(epsilon * n).
int far_threshold(int n, double epsilon);
FarGeodesic far_geodesic_exists(const Permutation& x, double epsilon, int max_n = kDefaultSearchN);

}  // namespace breakgeo
