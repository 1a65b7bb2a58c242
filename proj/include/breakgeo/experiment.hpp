#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "breakgeo/geodesic.hpp"
#include "breakgeo/moments.hpp"
#include "breakgeo/segment.hpp"

namespace breakgeo {

struct ExperimentConfig {
  int n = 0;
  int m = 0;
  std::optional<int> k;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  double epsilon = 0.25;
  int parallelism = 1;
  /// With k given: draw a new segment set per sample (true) or one for the run.
  bool fresh_segments = true;
};

struct MomentReport {
  ExperimentConfig config;
  MomentVector expect;
  VarianceVector var;
  Quad<double> mean;
  Quad<double> variance;
  Quad<double> mean_se;
  Quad<double> var_se;
  Quad<bool> mean_ok;
  Quad<bool> var_ok;
  /// The fixed segment set, when one was used.
  std::optional<SegmentSet> segments;
};

MomentReport mc_moments(const ExperimentConfig& cfg);

struct ExactMoments {
  MomentVector mean;
  VarianceVector var;
};

/// Population moments over all of S_n for a fixed segment set.
ExactMoments exhaustive_moments(const SegmentSet& segments, int max_n = kDefaultExhaustiveN, int threads = 1);
/// Over every m-subset of A_id crossed with S_n.
ExactMoments exhaustive_moments_unconditional(int n, int m, int max_n = kDefaultExhaustiveN, int threads = 1);

struct FigureRow {
  int m = 0;
  Quad<Rational> e_over_n;
};

std::vector<FigureRow> figure_curves(int n, int steps);

/// The reference probability bound, summed over k; 0 when m = n-1.
Rational xn_probability_bound(int n, int m);

struct Proportion {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double std_error = 0.0;
};

/// Wilson score interval at 95%.
Proportion wilson(std::uint64_t hits, std::uint64_t samples);

Proportion far_geodesic_probability(int n, double epsilon, std::uint64_t samples, std::uint64_t seed,
                                    int parallelism = 1, int max_n = kDefaultSearchN);
Rational far_geodesic_fraction_exhaustive(int n, double epsilon, int max_n = kDefaultExhaustiveN, int threads = 1);

}  // namespace breakgeo
