#include <doctest.h>

#include "breakgeo/classify.hpp"
#include "breakgeo/error.hpp"
#include "breakgeo/geodesic.hpp"
#include "breakgeo/path_assembly.hpp"
#include "oracles.hpp"

using namespace breakgeo;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

std::set<oracle::Pair> pairs_of(const SegmentSet& s) {
  std::set<oracle::Pair> out;
  for (const auto& a : s.adjacencies()) out.insert({a.lo, a.hi});
  return out;
}

/// Every segment set of id^(n), m = 0..n-1.
std::vector<SegmentSet> all_identity_sets(int n) {
  std::vector<SegmentSet> out;
  for (int m = 0; m <= n - 1; ++m) for_each_identity_subset(n, m, [&](const SegmentSet& s) { out.push_back(s); });
  return out;
}

}  // namespace

TEST_SUITE("geodesic") {
  TEST_CASE("geodesic point examples") {
    const auto x = P("1 2 3 4 5"), y = P("2 1 3 5 4");
    CHECK(is_geodesic_point(x, x, y));
    CHECK(is_geodesic_point(P("2 1 3 4 5"), x, y));
    CHECK_FALSE(is_geodesic_point(P("1 3 2 4"), P("1 2 3 4"), P("2 1 4 3")));
    CHECK_THROWS_AS(is_geodesic_point(x, x, P("1 2 3 4")), Error);
  }

  TEST_CASE("both criteria agree, n <= 5 all pairs") {
    for (int n = 2; n <= 5; ++n) {
      const auto all = oracle::all_perms(n);
      for (const auto& a : all) {
        for (const auto& b : all) {
          for (const auto& z : all) {
            const Permutation Z(z), A(a), B(b);
            REQUIRE(is_geodesic_point(Z, A, B) == satisfies_adjacency_sandwich(Z, A, B));
          }
        }
      }
    }
  }

  TEST_CASE("geodesic enumeration") {
    const auto id4 = Permutation::identity(4);
    const auto set = enumerate_geodesic_points(id4, P("2 1 4 3"));
    CHECK(set == GeodesicSet{id4, P("2 1 4 3")});
    CHECK(enumerate_geodesic_points(P("3 1 2 4"), P("3 1 2 4")) == GeodesicSet{P("3 1 2 4")});
    CHECK(enumerate_geodesic_points(P("1 2 3 4 5"), P("2 1 3 5 4")).count(P("2 1 3 4 5")) == 1);
    const auto all = oracle::all_perms(5);
    for (std::size_t i = 0; i < all.size(); i += 9) {
      for (std::size_t j = 0; j < all.size(); j += 4) {
        const auto lib = enumerate_geodesic_points(Permutation(all[i]), Permutation(all[j]));
        const auto ref = oracle::geodesic_points(all[i], all[j], all);
        std::set<oracle::Perm> got;
        for (const auto& p : lib) got.insert({p.values().begin(), p.values().end()});
        REQUIRE(got == ref);
      }
    }
    CHECK_THROWS_AS(enumerate_geodesic_points(Permutation::identity(9), Permutation::identity(9)), Error);
  }

  TEST_CASE("membership examples") {
    const auto x = P("6 4 1 3 8 10 2 9 7 5");
    const auto I = parse_segment_set("[4,5,6,7]", 10);
    const auto w = xn_membership(x, I);
    REQUIRE(w.has_value());
    CHECK(validate_witness(x, I, *w).empty());
    CHECK(free_core(x, I).adjacencies().is_subset_of(w->j_set.adjacencies()));

    const auto id4 = Permutation::identity(4);
    const auto I2 = parse_segment_set("[1,2]", 4);
    const auto w2 = xn_membership(id4, I2);
    REQUIRE(w2.has_value());
    CHECK(canonical_class(w2->pi) == id4);
    CHECK(w2->j_set.to_string() == "[2,3,4]");

    CHECK_FALSE(xn_membership(P("1 3 2 4"), parse_segment_set("[1,2,3]", 4)).has_value());
  }

  TEST_CASE("membership equals brute force and every witness is valid, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
      const auto perms = oracle::all_perms(n);
      for (const auto& I : all_identity_sets(n)) {
        const auto ref = pairs_of(I);
        const auto F = [&](const Permutation& x) { return free_core(x, I).adjacencies(); };
        for (const auto& v : perms) {
          const Permutation x(v);
          const auto w = xn_membership(x, I);
          REQUIRE(w.has_value() == oracle::member(v, ref, perms));
          if (!w) continue;
          REQUIRE(validate_witness(x, I, *w).empty());
          REQUIRE(F(x).is_subset_of(w->j_set.adjacencies()));
        }
      }
    }
  }

  TEST_CASE("every witness for x leaves at most one free-core adjacency unused, n <= 6") {
    for (int n = 3; n <= 6; ++n) {
      const auto perms = oracle::all_perms(n);
      for (const auto& I : all_identity_sets(n)) {
        const auto inner = I.adjacencies();
        for (std::size_t xi = 0; xi < perms.size(); xi += 3) {
          const Permutation x(perms[xi]);
          const auto ax = adjacency_set(x);
          const auto core = free_core(x, I).adjacencies();
          for (const auto& v : perms) {
            if (v.front() > v.back()) continue;
            const auto ap = adjacency_set(Permutation(v));
            if (!inner.is_subset_of(ap) || !ap.minus(inner).is_subset_of(ax)) continue;
            REQUIRE(core.minus(ap.minus(inner)).size() <= 1);
          }
        }
      }
    }
  }

  TEST_CASE("completion conditions without connectivity admit a cycle") {
    const auto I = parse_segment_set("[1,2];[3,4]", 6);
    const auto J = parse_segment_set("[2,5,6,1]", 6);
    const auto match = match_complement_conditions(I, J);
    REQUIRE(match.has_value());
    CHECK(match->case_tag == CaseTag::I);
    CHECK(std::set<int>{match->q, match->r} == std::set<int>{3, 4});
    CHECK_FALSE(completes_to_path(I, J));
  }

  TEST_CASE("counts on small inputs") {
    const auto I = parse_segment_set("[1,2]", 4);
    const auto exact = xn_exact_count(I);
    CHECK(exact <= 24);
    CHECK(exact == xn_union_count(I));
    CHECK(xn_pair_count_oracle(I) == 32);
    CHECK(xn_pair_count_oracle(parse_segment_set("[1,2,3,4]", 4)) == 24);
    CHECK(xn_exact_count(parse_segment_set("[1,2,3,4,5]", 5)) == 120);
    for (int n = 2; n <= 6; ++n) {
      for (const auto& S : all_identity_sets(n)) {
        const auto e = xn_exact_count(S, 8, 2);
        REQUIRE(e == xn_union_count(S));
        REQUIRE(e <= xn_pair_count_oracle(S));
      }
    }
  }

  TEST_CASE("closed forms") {
    CHECK(xn_closed_form(4, 1, 1) == 20);
    CHECK(xn_closed_form(10, 3, 1) == 155520);
    CHECK(xn_closed_form(4, 3, 1) == 0);
    CHECK(count_containing(4, 1, 1) == 12);
    CHECK(count_containing(7, 6, 1) == 2);
    CHECK(count_containing(6, 2, 2) == 96);
    CHECK_THROWS_AS(xn_closed_form(4, 3, 2), Error);
  }

  TEST_CASE("containing count against enumeration, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
      const auto perms = oracle::all_perms(n);
      for (int m = 1; m < n; ++m) {
        for_each_identity_subset(n, m, [&](const SegmentSet& S) {
          const auto ref = pairs_of(S);
          long c = 0;
          for (const auto& v : perms) c += oracle::contains(oracle::adjacencies(v), ref);
          REQUIRE(count_containing(n, m, S.segment_count()) == c);
        });
      }
    }
  }

  TEST_CASE("far geodesic examples") {
    CHECK_FALSE(far_geodesic_exists(Permutation::identity(6), 0.3).exists);
    CHECK_FALSE(far_geodesic_exists(P("2 1 4 3"), 0.25).exists);
    const auto r = far_geodesic_exists(P("2 1 3 5 4"), 0.2);
    REQUIRE(r.exists);
    const auto id5 = Permutation::identity(5), x = P("2 1 3 5 4");
    CHECK(is_geodesic_point(*r.witness, id5, x));
    CHECK(bp_distance(*r.witness, id5) >= 1);
    CHECK(bp_distance(*r.witness, x) >= 1);
    CHECK(far_threshold(5, 0.2) == 1);
    CHECK(far_threshold(8, 0.25) == 2);
    CHECK(far_threshold(10, 0.25) == 3);
    CHECK_THROWS_AS(far_geodesic_exists(Permutation::identity(13), 0.2), Error);
    CHECK_THROWS_AS(far_threshold(5, 0.0), Error);
  }

  TEST_CASE("far geodesic search matches scan of geodesic sets, n <= 6") {
    for (int n = 3; n <= 6; ++n) {
      const auto all = oracle::all_perms(n);
      const oracle::Perm id = all.front();
      for (double eps : {0.2, 0.34}) {
        const int t = far_threshold(n, eps);
        for (const auto& v : all) {
          bool ref = false;
          for (const auto& z : oracle::geodesic_points(id, v, all)) {
            ref |= oracle::bp(z, id) >= t && oracle::bp(z, v) >= t;
          }
          REQUIRE(far_geodesic_exists(Permutation(v), eps).exists == ref);
        }
      }
    }
  }

  TEST_CASE("path assembly respects label minimums") {
    AssemblyRequest req;
    req.n = 4;
    req.optional = {{make_adjacency(1, 2), 0}, {make_adjacency(2, 3), 0}, {make_adjacency(3, 4), 1}};
    req.min_label = {2, 1};
    const auto p = assemble_path(req);
    REQUIRE(p.has_value());
    CHECK(canonical_class(*p) == Permutation::identity(4));
    req.min_label = {0, 2};
    CHECK_FALSE(assemble_path(req).has_value());
  }
}
