#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "breakgeo/rng.hpp"

namespace breakgeo {

/// Unordered pair {lo, hi} with lo < hi.
struct Adjacency {
  int lo = 0;
  int hi = 0;

  auto operator<=>(const Adjacency&) const = default;
};

Adjacency make_adjacency(int a, int b);

/// Set of unordered pairs over [n], kept sorted.
class AdjacencySet {
 public:
  AdjacencySet() = default;
  explicit AdjacencySet(std::vector<Adjacency> pairs);

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(Adjacency a) const;
  bool contains(int a, int b) const { return contains(make_adjacency(a, b)); }
  bool is_subset_of(const AdjacencySet& other) const;

  std::size_t intersection_size(const AdjacencySet& other) const;
  AdjacencySet intersection_with(const AdjacencySet& other) const;
  AdjacencySet minus(const AdjacencySet& other) const;
  AdjacencySet union_with(const AdjacencySet& other) const;

  std::span<const Adjacency> pairs() const { return pairs_; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  std::string to_string() const;

  bool operator==(const AdjacencySet&) const = default;

 private:
  std::vector<Adjacency> pairs_;
};

/// A bijection on [n] = {1..n}, n >= 2, stored as its value sequence.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](std::size_t position) const { return values_[position]; }
  std::span<const int> values() const { return values_; }

  Permutation reversed() const;
  /// positions()[v] is the 0-based position of value v; index 0 unused.
  std::vector<int> positions() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

using ClassSet = std::set<Permutation>;

/// Accepts decimal values separated by spaces and/or commas.
Permutation parse_permutation(std::string_view text);

AdjacencySet adjacency_set(const Permutation& x);
AdjacencySet adjacency_set(std::span<const int> values);

int common_adjacency_count(const Permutation& x, const Permutation& y);
int bp_distance(const Permutation& x, const Permutation& y);

/// Lexicographic minimum of x and its reversal.
Permutation canonical_class(const Permutation& x);
bool is_canonical(std::span<const int> values);

/// (z o x)_i = z_{x_i}.
Permutation compose(const Permutation& z, const Permutation& x);

Permutation sample_uniform(int n, RandomStream& rng);

}  // namespace breakgeo
