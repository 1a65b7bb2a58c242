#pragma once

#include <cstdint>
#include <limits>

namespace breakgeo {

/// Counter-derived random stream. The stream for (seed, index) depends only on
/// those two numbers, so sample j can be regenerated without touching samples
/// 0..j-1, whichever worker runs it. Generator core is SplitMix64.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t seed, std::uint64_t index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

 private:
  std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t z);

}  // namespace breakgeo
