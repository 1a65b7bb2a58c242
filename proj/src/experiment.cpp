#include "breakgeo/experiment.hpp"

#include <cmath>
#include <limits>

#include "breakgeo/classify.hpp"
#include "breakgeo/error.hpp"
#include "breakgeo/kernels.hpp"

namespace breakgeo {

namespace {

__extension__ typedef unsigned __int128 u128;

BigInt to_big(u128 v) {
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

/// Sums of c, c^2, c^3, c^4 per class over the visited permutations.
struct PowerSums {
  std::array<std::array<u128, 4>, 4> s{};
  std::uint64_t count = 0;

  void add(const ClassCounts& c) {
    const std::array<int, 4> v{c.alpha, c.beta, c.gamma, c.delta};
    for (int t = 0; t < 4; ++t) {
      u128 p = 1;
      for (int e = 0; e < 4; ++e) {
        p *= static_cast<u128>(v[t]);
        s[t][e] += p;
      }
    }
    ++count;
  }

  void merge(const PowerSums& o) {
    for (int t = 0; t < 4; ++t) {
      for (int e = 0; e < 4; ++e) s[t][e] += o.s[t][e];
    }
    count += o.count;
  }
};

Rational exact_ratio(const BigInt& a, const BigInt& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

ExactMoments population_moments(const PowerSums& sums) {
  ExactMoments out;
  const BigInt total(static_cast<unsigned long>(sums.count));
  for (int t = 0; t < 4; ++t) {
    out.mean[t] = exact_ratio(to_big(sums.s[t][0]), total);
    out.var[t] = exact_ratio(to_big(sums.s[t][1]), total) - out.mean[t] * out.mean[t];
  }
  return out;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.samples < 1) throw Error(ErrorKind::InvalidRange, "samples must be >= 1");
  if (cfg.n < 2) throw Error(ErrorKind::TooShort, "n must be >= 2, got " + std::to_string(cfg.n));
  if (cfg.k) {
    if (*cfg.k < 1 || cfg.m < *cfg.k || cfg.m > cfg.n - *cfg.k) {
      throw Error(ErrorKind::InvalidRange, "need 1 <= k <= m <= n-k, got n=" + std::to_string(cfg.n) +
                                               " m=" + std::to_string(cfg.m) + " k=" + std::to_string(*cfg.k));
    }
  } else if (cfg.m < 1 || cfg.m > cfg.n - 1) {
    throw Error(ErrorKind::InvalidRange, "need 1 <= m <= n-1, got n=" + std::to_string(cfg.n) + " m=" +
                                             std::to_string(cfg.m));
  }
}

template <typename Visit>
PowerSums run_samples(const ExperimentConfig& cfg, Visit&& visit) {
  auto merge = [](PowerSums& into, const PowerSums& from) { into.merge(from); };
  if (cfg.parallelism <= 1) return sample_serial(cfg.samples, cfg.seed, PowerSums{}, visit);
  return sample_parallel(cfg.samples, cfg.seed, PowerSums{}, visit, merge, cfg.parallelism);
}

}  // namespace

MomentReport mc_moments(const ExperimentConfig& cfg) {
  validate(cfg);
  MomentReport report;
  report.config = cfg;
  if (cfg.k) {
    report.expect = expected_counts_conditional(cfg.n, cfg.m, *cfg.k);
    report.var = variance_counts_conditional(cfg.n, cfg.m, *cfg.k);
  } else {
    report.expect = expected_counts_unconditional(cfg.n, cfg.m);
    report.var = variance_counts_unconditional(cfg.n, cfg.m);
  }

  PowerSums sums;
  if (cfg.k && !cfg.fresh_segments) {
    RandomStream setup(cfg.seed, std::numeric_limits<std::uint64_t>::max());
    report.segments = sample_segment_set(cfg.n, cfg.m, cfg.k, setup);
    const auto classes = point_classes(*report.segments).of;
    sums = run_samples(cfg, [&](PowerSums& acc, std::uint64_t, RandomStream& rng) {
      const auto x = sample_uniform(cfg.n, rng);
      acc.add(count_classes(x.values(), classes));
    });
  } else {
    sums = run_samples(cfg, [&](PowerSums& acc, std::uint64_t, RandomStream& rng) {
      const auto segments = sample_segment_set(cfg.n, cfg.m, cfg.k, rng);
      const auto x = sample_uniform(cfg.n, rng);
      acc.add(count_classes(x.values(), point_classes(segments).of));
    });
  }

  const BigInt count(static_cast<unsigned long>(sums.count));
  const double nd = static_cast<double>(sums.count);
  for (int t = 0; t < 4; ++t) {
    std::array<Rational, 4> raw;
    for (int e = 0; e < 4; ++e) raw[e] = exact_ratio(to_big(sums.s[t][e]), count);
    const Rational mean = raw[0];
    const Rational m2 = raw[1] - mean * mean;
    const Rational m4 = raw[3] - 4 * mean * raw[2] + 6 * mean * mean * raw[1] - 3 * mean * mean * mean * mean;
    const Rational unbiased = sums.count > 1 ? Rational(m2 * count / (count - 1)) : Rational(0);
    report.mean[t] = mean.get_d();
    report.variance[t] = unbiased.get_d();
    report.mean_se[t] = std::sqrt(unbiased.get_d() / nd);
    report.var_se[t] = std::sqrt(std::max(0.0, Rational(m4 - m2 * m2).get_d()) / nd);
    auto within = [](const Rational& estimate, const Rational& target, double se) {
      if (se == 0.0) return estimate == target;
      return std::abs(Rational(estimate - target).get_d()) <= 4.0 * se;
    };
    report.mean_ok[t] = within(mean, report.expect[t], report.mean_se[t]);
    report.var_ok[t] = within(unbiased, report.var[t], report.var_se[t]);
  }
  return report;
}

ExactMoments exhaustive_moments(const SegmentSet& segments, int max_n, int threads) {
  const int n = segments.n();
  if (n > max_n) {
    throw Error(ErrorKind::TooLarge, "exhaustive moments need n <= " + std::to_string(max_n) + ", got n = " +
                                         std::to_string(n));
  }
  const auto classes = point_classes(segments).of;
  const auto sums = scan_parallel(
      n, PowerSums{}, [&](PowerSums& acc, std::span<const int> v) { acc.add(count_classes(v, classes)); },
      [](PowerSums& into, const PowerSums& from) { into.merge(from); }, threads);
  return population_moments(sums);
}

ExactMoments exhaustive_moments_unconditional(int n, int m, int max_n, int threads) {
  if (n > max_n) {
    throw Error(ErrorKind::TooLarge, "exhaustive moments need n <= " + std::to_string(max_n) + ", got n = " +
                                         std::to_string(n));
  }
  if (m < 1 || m > n - 1) {
    throw Error(ErrorKind::InvalidRange, "need 1 <= m <= n-1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  PowerSums total;
  for_each_identity_subset(n, m, [&](const SegmentSet& segments) {
    const auto classes = point_classes(segments).of;
    total.merge(scan_parallel(
        n, PowerSums{}, [&](PowerSums& acc, std::span<const int> v) { acc.add(count_classes(v, classes)); },
        [](PowerSums& into, const PowerSums& from) { into.merge(from); }, threads));
  });
  return population_moments(total);
}

std::vector<FigureRow> figure_curves(int n, int steps) {
  if (steps < 2 || n < steps) {
    throw Error(ErrorKind::InvalidRange, "need steps >= 2 and n >= steps, got n=" + std::to_string(n) + " steps=" +
                                             std::to_string(steps));
  }
  std::vector<FigureRow> rows;
  for (int j = 1; j < steps; ++j) {
    const long long m = (2LL * j * n + steps) / (2LL * steps);
    FigureRow row;
    row.m = static_cast<int>(m);
    const auto e = expected_counts_unconditional(n, row.m);
    for (int t = 0; t < 4; ++t) row.e_over_n[t] = e[t] / n;
    rows.push_back(row);
  }
  return rows;
}

Rational xn_probability_bound(int n, int m) {
  if (m < 1 || m > n - 1) {
    throw Error(ErrorKind::InvalidRange, "need 1 <= m <= n-1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  if (n - m - 2 < 0) return 0;
  Rational total = 0;
  for (int k = 1; k <= m; ++k) {
    const BigInt choose = binomial(m - 1, k - 1) * binomial(n - m, k);
    if (choose == 0) continue;
    const long free = n - m - k;
    const Rational bracket =
        Rational(BigInt(k) * k * (k - 1) + BigInt(2 * k) * free) + Rational(BigInt(free) * (free - 1), k + 1);
    total += Rational(choose * (BigInt(1) << k) * factorial(m + 1) * factorial(n - m - 2),
                      binomial(n - 1, m) * factorial(k) * factorial(n)) *
             bracket;
    total.canonicalize();
  }
  return total;
}

Proportion wilson(std::uint64_t hits, std::uint64_t samples) {
  constexpr double z = 1.959963984540054;
  Proportion p;
  p.hits = hits;
  p.samples = samples;
  const double nd = static_cast<double>(samples);
  p.estimate = static_cast<double>(hits) / nd;
  p.std_error = std::sqrt(p.estimate * (1 - p.estimate) / nd);
  const double denom = 1 + z * z / nd;
  const double center = (p.estimate + z * z / (2 * nd)) / denom;
  const double half = z * std::sqrt(p.estimate * (1 - p.estimate) / nd + z * z / (4 * nd * nd)) / denom;
  p.lower = std::max(0.0, center - half);
  p.upper = std::min(1.0, center + half);
  return p;
}

Proportion far_geodesic_probability(int n, double epsilon, std::uint64_t samples, std::uint64_t seed,
                                    int parallelism, int max_n) {
  if (samples < 1) throw Error(ErrorKind::InvalidRange, "samples must be >= 1");
  if (n < 2) throw Error(ErrorKind::TooShort, "n must be >= 2, got " + std::to_string(n));
  far_threshold(n, epsilon);
  if (n > max_n) {
    throw Error(ErrorKind::TooLarge, "far-geodesic search needs n <= " + std::to_string(max_n) + ", got n = " +
                                         std::to_string(n));
  }
  auto visit = [&](std::uint64_t& acc, std::uint64_t, RandomStream& rng) {
    if (far_geodesic_exists(sample_uniform(n, rng), epsilon, max_n).exists) ++acc;
  };
  std::uint64_t hits = 0;
  if (parallelism <= 1) {
    hits = sample_serial(samples, seed, std::uint64_t{0}, visit);
  } else {
    hits = sample_parallel(samples, seed, std::uint64_t{0}, visit,
                           [](std::uint64_t& into, std::uint64_t from) { into += from; }, parallelism);
  }
  return wilson(hits, samples);
}

Rational far_geodesic_fraction_exhaustive(int n, double epsilon, int max_n, int threads) {
  if (n < 2) throw Error(ErrorKind::TooShort, "n must be >= 2, got " + std::to_string(n));
  far_threshold(n, epsilon);
  if (n > max_n) {
    throw Error(ErrorKind::TooLarge, "exhaustive far-geodesic scan needs n <= " + std::to_string(max_n) +
                                         ", got n = " + std::to_string(n));
  }
  const std::uint64_t hits = scan_parallel(
      n, std::uint64_t{0},
      [&](std::uint64_t& acc, std::span<const int> v) {
        if (far_geodesic_exists(Permutation(std::vector<int>(v.begin(), v.end())), epsilon, kDefaultSearchN).exists) ++acc;
      },
      [](std::uint64_t& into, std::uint64_t from) { into += from; }, threads);
  return exact_ratio(BigInt(static_cast<unsigned long>(hits)), factorial(n));
}

}  // namespace breakgeo
