#include "breakgeo/accessibility.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>

#include "breakgeo/error.hpp"

namespace breakgeo {

namespace {

int common_size(const ClassSet& classes) {
  if (classes.empty()) throw Error(ErrorKind::InvalidRange, "class set is empty");
  const int n = classes.begin()->size();
  for (const auto& c : classes) {
    if (c.size() != n) {
      throw Error(ErrorKind::SizeMismatch, "sizes " + std::to_string(n) + " and " + std::to_string(c.size()));
    }
  }
  return n;
}

std::vector<int> indices(const ClassSpace& space, const ClassSet& classes) {
  std::vector<int> out;
  for (const auto& c : classes) out.push_back(space.index_of(c));
  return out;
}

ClassSet from_flags(const ClassSpace& space, const std::vector<bool>& flags) {
  ClassSet out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.insert(space.reps[i]);
  }
  return out;
}

std::vector<bool> closure_step(const ClassSpace& space, const std::vector<int>& members) {
  std::vector<bool> flags(space.size(), false);
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a; b < members.size(); ++b) {
      for (int z : geodesic_indices(space, members[a], members[b])) flags[z] = true;
    }
  }
  return flags;
}

std::vector<int> members_of(const std::vector<bool>& flags) {
  std::vector<int> out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<bool> reachable(const ClassSpace& space, const std::vector<int>& targets) {
  std::vector<bool> seen(space.size(), false);
  std::deque<int> queue;
  for (int t : targets) {
    if (!seen[t]) {
      seen[t] = true;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    const int z = queue.front();
    queue.pop_front();
    for (int y : targets) {
      for (int w : geodesic_indices(space, z, y)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return seen;
}

}  // namespace

ClassSet to_class_set(const std::vector<Permutation>& perms) {
  ClassSet out;
  for (const auto& p : perms) out.insert(canonical_class(p));
  return out;
}

ClassSet geodesic_closure_step(const ClassSet& classes, int max_n) {
  const auto space = build_class_space(common_size(classes), max_n);
  return from_flags(space, closure_step(space, indices(space, classes)));
}

Closure accessible_closure(const ClassSet& classes, int max_n) {
  const auto space = build_class_space(common_size(classes), max_n);
  auto current = indices(space, classes);
  std::sort(current.begin(), current.end());
  int order = 0;
  while (true) {
    auto next = members_of(closure_step(space, current));
    if (next == current) break;
    current = std::move(next);
    ++order;
  }
  std::vector<bool> flags(space.size(), false);
  for (int i : current) flags[i] = true;
  return {from_flags(space, flags), order};
}

ClassSet one_step_accessible(const ClassSet& classes, int max_n) {
  const auto space = build_class_space(common_size(classes), max_n);
  return from_flags(space, reachable(space, indices(space, classes)));
}

ClassSet iterated_one_step(const ClassSet& classes, int max_n) {
  const auto space = build_class_space(common_size(classes), max_n);
  auto current = indices(space, classes);
  std::sort(current.begin(), current.end());
  while (true) {
    auto next = members_of(reachable(space, current));
    if (next == current) break;
    current = std::move(next);
  }
  std::vector<bool> flags(space.size(), false);
  for (int i : current) flags[i] = true;
  return from_flags(space, flags);
}

MedianReport medians_bruteforce(const std::vector<Permutation>& inputs, int max_n) {
  if (inputs.empty()) throw Error(ErrorKind::InvalidRange, "median needs at least one permutation");
  const int n = inputs.front().size();
  for (const auto& p : inputs) {
    if (p.size() != n) throw Error(ErrorKind::SizeMismatch, "sizes " + std::to_string(n) + " and " + std::to_string(p.size()));
  }
  const auto space = build_class_space(n, max_n);
  std::vector<AdjMask> masks;
  for (const auto& p : inputs) masks.push_back(adjacency_mask(p.values()));
  MedianReport report;
  report.value = std::numeric_limits<int>::max();
  for (std::size_t z = 0; z < space.size(); ++z) {
    int total = 0;
    for (AdjMask m : masks) total += n - 1 - std::popcount(m & space.masks[z]);
    report.totals.emplace(space.reps[z], total);
    if (total < report.value) {
      report.value = total;
      report.medians.clear();
    }
    if (total == report.value) report.medians.insert(space.reps[z]);
  }
  return report;
}

}  // namespace breakgeo
