#include <doctest.h>

#include <cmath>

#include "breakgeo/error.hpp"
#include "breakgeo/experiment.hpp"
#include "breakgeo/report.hpp"
#include "oracles.hpp"

using namespace breakgeo;

TEST_SUITE("experiment") {
  TEST_CASE("monte carlo agrees with closed forms") {
    ExperimentConfig cfg;
    cfg.n = 100;
    cfg.m = 30;
    cfg.k = 10;
    cfg.samples = 100000;
    cfg.seed = 42;
    cfg.parallelism = 4;
    const auto r = mc_moments(cfg);
    for (int t = 0; t < 4; ++t) {
      INFO("class " << kClassNames[t]);
      CHECK(r.mean_ok[t]);
      CHECK(r.var_ok[t]);
      CHECK(std::abs(r.mean[t] - to_double(r.expect[t])) <= 4 * r.mean_se[t]);
    }
    CHECK(r.mean.sum() == doctest::Approx(99.0));
  }

  TEST_CASE("pinned seeds 1..5 stay within four standard errors") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      for (bool with_k : {true, false}) {
        ExperimentConfig cfg;
        cfg.n = 100;
        cfg.m = 30;
        if (with_k) cfg.k = 10;
        cfg.samples = 20000;
        cfg.seed = seed;
        cfg.parallelism = 2;
        const auto r = mc_moments(cfg);
        for (int t = 0; t < 4; ++t) {
          INFO("seed " << seed << " class " << kClassNames[t] << " k " << with_k);
          CHECK(r.mean_ok[t]);
          CHECK(r.var_ok[t]);
        }
      }
    }
  }

  TEST_CASE("monte carlo without k and with one fixed segment set") {
    ExperimentConfig cfg;
    cfg.n = 40;
    cfg.m = 12;
    cfg.samples = 20000;
    cfg.seed = 3;
    const auto r = mc_moments(cfg);
    for (int t = 0; t < 4; ++t) CHECK(r.mean_ok[t]);
    CHECK_FALSE(r.segments.has_value());

    cfg.k = 4;
    cfg.fresh_segments = false;
    const auto f = mc_moments(cfg);
    REQUIRE(f.segments.has_value());
    CHECK(f.segments->adjacency_count() == 12);
    CHECK(f.segments->segment_count() == 4);
    for (int t = 0; t < 4; ++t) CHECK(f.mean_ok[t]);
  }

  TEST_CASE("reports do not depend on worker count") {
    ExperimentConfig cfg;
    cfg.n = 60;
    cfg.m = 20;
    cfg.k = 5;
    cfg.samples = 5000;
    cfg.seed = 9;
    cfg.parallelism = 1;
    const auto a = mc_report_json(mc_moments(cfg)).dump();
    cfg.parallelism = 8;
    const auto b = mc_report_json(mc_moments(cfg)).dump();
    CHECK(a == b);
    cfg.fresh_segments = false;
    cfg.parallelism = 1;
    const auto c = mc_report_json(mc_moments(cfg)).dump();
    cfg.parallelism = 3;
    CHECK(c == mc_report_json(mc_moments(cfg)).dump());
  }

  TEST_CASE("invalid configurations are rejected") {
    ExperimentConfig cfg;
    cfg.n = 10;
    cfg.m = 8;
    cfg.k = 3;
    CHECK_THROWS_AS(mc_moments(cfg), Error);
    cfg.k.reset();
    cfg.m = 10;
    CHECK_THROWS_AS(mc_moments(cfg), Error);
    cfg.m = 4;
    cfg.samples = 0;
    CHECK_THROWS_AS(mc_moments(cfg), Error);
  }

  TEST_CASE("exhaustive moments equal closed forms") {
    const auto I = parse_segment_set("[2,3];[4,5]", 5);
    const auto r = exhaustive_moments(parse_segment_set("[2,3,4]", 5));
    CHECK(r.mean == expected_counts_conditional(5, 2, 1));
    CHECK(r.var == variance_counts_conditional(5, 2, 1));
    const auto r2 = exhaustive_moments(I, 8, 4);
    CHECK(r2.mean == expected_counts_conditional(5, 2, 2));
    CHECK(r2.var == variance_counts_conditional(5, 2, 2));
    for (int n = 3; n <= 6; ++n) {
      for (int m = 1; m < n; ++m) {
        const auto u = exhaustive_moments_unconditional(n, m, 8, 2);
        REQUIRE(u.mean == expected_counts_unconditional(n, m));
        REQUIRE(u.var == variance_counts_unconditional(n, m));
      }
    }
    CHECK_THROWS_AS(exhaustive_moments(SegmentSet::empty(9)), Error);
  }

  TEST_CASE("figure curves") {
    const auto rows = figure_curves(20, 20);
    REQUIRE(rows.size() == 19);
    const auto& mid = rows[9];
    CHECK(mid.m == 10);
    CHECK(mid.e_over_n[2] == Rational(5, 19));
    CHECK(mid.e_over_n.sum() == Rational(19, 20));
    for (const auto& row : rows) CHECK(row.e_over_n.sum() == Rational(19, 20));
    const auto big = figure_curves(10000, 20);
    CHECK(std::abs(to_double(big[9].e_over_n[2]) - 0.25) < 0.01);
    CHECK_THROWS_AS(figure_curves(20, 1), Error);
    CHECK_THROWS_AS(figure_curves(5, 6), Error);
  }

  TEST_CASE("probability bound") {
    CHECK(xn_probability_bound(4, 1) == Rational(5, 6));
    CHECK(xn_probability_bound(8, 7) == 0);
    Rational sum = 0;
    for (int k = 1; k <= 3; ++k) {
      if (3 > 10 - k) continue;
      Rational term(xn_closed_form(10, 3, k), factorial(10));
      term.canonicalize();
      sum += segment_count_probability(10, 3, k) * term;
    }
    CHECK(xn_probability_bound(10, 3) == sum);
    CHECK_THROWS_AS(xn_probability_bound(4, 4), Error);
  }

  TEST_CASE("wilson interval") {
    const auto p = wilson(0, 100);
    CHECK(p.estimate == 0.0);
    CHECK(p.lower == doctest::Approx(0.0));
    CHECK(p.upper == doctest::Approx(0.036994).epsilon(1e-4));
    const auto q = wilson(50, 100);
    CHECK(q.lower == doctest::Approx(0.40383).epsilon(1e-4));
    CHECK(q.upper == doctest::Approx(0.59617).epsilon(1e-4));
  }

  TEST_CASE("far geodesic experiments") {
    const int n = 4;
    const auto all = oracle::all_perms(n);
    const int t = far_threshold(n, 0.25);
    long hits = 0;
    for (const auto& v : all) {
      bool hit = false;
      for (const auto& z : oracle::geodesic_points(all.front(), v, all)) {
        hit |= oracle::bp(z, all.front()) >= t && oracle::bp(z, v) >= t;
      }
      hits += hit;
    }
    Rational expect(hits, 24);
    expect.canonicalize();
    CHECK(far_geodesic_fraction_exhaustive(4, 0.25) == expect);

    const auto a = far_geodesic_probability(9, 0.25, 300, 5, 1);
    const auto b = far_geodesic_probability(9, 0.25, 300, 5, 4);
    CHECK(a.hits == b.hits);
    CHECK(a.estimate >= 0.0);
    CHECK(a.estimate <= 1.0);
    CHECK(a.lower <= a.estimate);
    CHECK(a.estimate <= a.upper);
    CHECK_THROWS_AS(far_geodesic_probability(13, 0.25, 10, 1), Error);
    CHECK_THROWS_AS(far_geodesic_probability(8, 1.5, 10, 1), Error);
  }
}
