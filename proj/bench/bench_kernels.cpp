// Serial reference vs OpenMP kernels. Prints wall time and checks that both
// paths agree.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include <omp.h>

#include "breakgeo/classify.hpp"
#include "breakgeo/experiment.hpp"
#include "breakgeo/kernels.hpp"
#include "breakgeo/segment.hpp"

using namespace breakgeo;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, serial, parallel, serial / parallel,
              agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  std::printf("threads: %d\n", threads);

  {
    const int n = 10;
    const auto classes = point_classes(leftmost_segment_set(n, 4, 2)).of;
    auto visit = [&](long long& acc, std::span<const int> v) { acc += count_classes(v, classes).alpha; };
    long long a = 0, b = 0;
    const double s = seconds([&] { a = scan_serial(n, 0LL, visit); });
    const double p = seconds([&] {
      b = scan_parallel(n, 0LL, visit, [](long long& into, long long from) { into += from; }, threads);
    });
    row("scan S_10 class counts", s, p, a == b);
  }
  {
    ExperimentConfig cfg;
    cfg.n = 200;
    cfg.m = 60;
    cfg.k = 20;
    cfg.samples = 100000;
    cfg.seed = 7;
    MomentReport r1, r2;
    const double s = seconds([&] {
      cfg.parallelism = 1;
      r1 = mc_moments(cfg);
    });
    const double p = seconds([&] {
      cfg.parallelism = threads;
      r2 = mc_moments(cfg);
    });
    row("mc moments n=200 1e5", s, p, r1.mean == r2.mean && r1.variance == r2.variance);
  }
  {
    const auto segments = leftmost_segment_set(8, 3, 2);
    BigInt a, b;
    const double s = seconds([&] { a = xn_exact_count(segments, 8, 1); });
    const double p = seconds([&] { b = xn_exact_count(segments, 8, threads); });
    row("membership scan S_8", s, p, a == b);
  }
  {
    Proportion a, b;
    const double s = seconds([&] { a = far_geodesic_probability(12, 0.25, 2000, 3, 1); });
    const double p = seconds([&] { b = far_geodesic_probability(12, 0.25, 2000, 3, threads); });
    row("far-geodesic n=12 2000", s, p, a.hits == b.hits);
  }
  return 0;
}
