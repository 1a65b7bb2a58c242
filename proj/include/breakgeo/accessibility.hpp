#pragma once

#include <map>
#include <vector>

#include "breakgeo/geodesic.hpp"
#include "breakgeo/permutation.hpp"

namespace breakgeo {

/// Union of the geodesic sets of all pairs (x, y) from X, x = y included.
ClassSet geodesic_closure_step(const ClassSet& classes, int max_n = kDefaultExhaustiveN);

struct Closure {
  ClassSet classes;
  int order = 0;
};

/// Least fixed point of geodesic_closure_step, and the number of steps that
/// changed the set.
Closure accessible_closure(const ClassSet& classes, int max_n = kDefaultExhaustiveN);

/// Classes reachable by chains z_{i+1} in geodesic set of (z_i, y), y in X,
/// starting from members of X.
ClassSet one_step_accessible(const ClassSet& classes, int max_n = kDefaultExhaustiveN);

/// one_step_accessible applied until nothing changes.
ClassSet iterated_one_step(const ClassSet& classes, int max_n = kDefaultExhaustiveN);

struct MedianReport {
  ClassSet medians;
  int value = 0;
  std::map<Permutation, int> totals;
};

MedianReport medians_bruteforce(const std::vector<Permutation>& inputs, int max_n = kDefaultExhaustiveN);

/// Canonicalizes every permutation.
ClassSet to_class_set(const std::vector<Permutation>& perms);

}  // namespace breakgeo
