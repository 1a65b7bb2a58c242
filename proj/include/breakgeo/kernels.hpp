#pragma once

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "breakgeo/rng.hpp"

namespace breakgeo {

/// Serial reference: visit(acc, values) for every permutation of [n] in
/// lexicographic order.
template <typename Acc, typename Visit>
Acc scan_serial(int n, Acc acc, Visit&& visit) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(acc, std::span<const int>(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return acc;
}

/// Same traversal split into blocks by the first two values. Block results are
/// merged in block order, so the outcome does not depend on thread count.
template <typename Acc, typename Visit, typename Merge>
Acc scan_parallel(int n, const Acc& empty, Visit&& visit, Merge&& merge, int threads) {
  if (n < 3) {
    Acc acc = empty;
    return scan_serial(n, acc, visit);
  }
  const int blocks = n * (n - 1);
  std::vector<Acc> partial(blocks, empty);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(threads, 1))
  for (int b = 0; b < blocks; ++b) {
    const int first = b / (n - 1) + 1;
    int second = b % (n - 1) + 1;
    if (second >= first) ++second;
    std::vector<int> v{first, second};
    for (int x = 1; x <= n; ++x) {
      if (x != first && x != second) v.push_back(x);
    }
    do {
      visit(partial[b], std::span<const int>(v));
    } while (std::next_permutation(v.begin() + 2, v.end()));
  }
  Acc acc = empty;
  for (const auto& p : partial) merge(acc, p);
  return acc;
}

inline constexpr std::uint64_t kSampleChunk = 512;

/// Serial reference: visit(acc, j, stream_j) for j = 0..count-1.
template <typename Acc, typename Visit>
Acc sample_serial(std::uint64_t count, std::uint64_t seed, Acc acc, Visit&& visit) {
  for (std::uint64_t j = 0; j < count; ++j) {
    RandomStream rng(seed, j);
    visit(acc, j, rng);
  }
  return acc;
}

/// Chunked version of sample_serial; chunks are merged in index order.
template <typename Acc, typename Visit, typename Merge>
Acc sample_parallel(std::uint64_t count, std::uint64_t seed, const Acc& empty, Visit&& visit, Merge&& merge,
                    int threads) {
  const std::int64_t chunks = static_cast<std::int64_t>((count + kSampleChunk - 1) / kSampleChunk);
  std::vector<Acc> partial(chunks, empty);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(threads, 1))
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t lo = static_cast<std::uint64_t>(c) * kSampleChunk;
    const std::uint64_t hi = std::min(count, lo + kSampleChunk);
    for (std::uint64_t j = lo; j < hi; ++j) {
      RandomStream rng(seed, j);
      visit(partial[c], j, rng);
    }
  }
  Acc acc = empty;
  for (const auto& p : partial) merge(acc, p);
  return acc;
}

}  // namespace breakgeo
