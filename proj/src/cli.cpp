#include "breakgeo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "breakgeo/accessibility.hpp"
#include "breakgeo/classify.hpp"
#include "breakgeo/error.hpp"
#include "breakgeo/experiment.hpp"
#include "breakgeo/geodesic.hpp"
#include "breakgeo/moments.hpp"
#include "breakgeo/report.hpp"
#include "breakgeo/segment.hpp"

namespace breakgeo {

namespace {

struct Options {
  std::string x, y;
  std::vector<std::string> perms;
  std::string segments;
  int n = 0;
  int m = 0;
  std::optional<int> k;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 42;
  double epsilon = 0.25;
  int steps = 20;
  std::string format;
  int parallelism = 1;
  int max_exhaustive_n = kDefaultExhaustiveN;
  int max_search_n = kDefaultSearchN;
  bool exact = false, mc = false, exhaustive = false, fixed_segments = false;
  double c = 0.0;
  std::optional<double> c_prime;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BREAKGEO_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "BREAKGEO_SEED='" + std::string(env) + "' is not a natural number");
    }
  }
  return 42;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Permutation one_perm(const Options& o) {
  if (o.perms.size() != 1) {
    throw Error(ErrorKind::ParseError, "expected exactly one --perm, got " + std::to_string(o.perms.size()));
  }
  return parse_permutation(o.perms.front());
}

std::vector<Permutation> all_perms(const Options& o) {
  if (o.perms.empty()) throw Error(ErrorKind::ParseError, "at least one --perm is required");
  std::vector<Permutation> out;
  for (const auto& p : o.perms) out.push_back(parse_permutation(p));
  return out;
}

void add_n(CLI::App* app, Options& o) { app->add_option("--n", o.n, "Permutation size")->required(); }
void add_nm(CLI::App* app, Options& o) {
  add_n(app, o);
  app->add_option("--m", o.m, "Number of adjacencies in the segment set")->required();
}
void add_k(CLI::App* app, Options& o, bool required) {
  auto* opt = app->add_option("--k", o.k, "Number of segments");
  if (required) opt->required();
}
void add_seed(CLI::App* app, Options& o) {
  app->add_option("--seed", o.seed, "Random seed (falls back to BREAKGEO_SEED)")->default_str("42");
}
void add_perms(CLI::App* app, Options& o, const std::string& what) {
  app->add_option("--perm", o.perms, what)->take_all()->allow_extra_args(false);
}
void add_segments(CLI::App* app, Options& o, bool required) {
  auto* opt = app->add_option("--segments", o.segments, "Segment set of id, e.g. \"[2,3,9,4];[5,6]\"");
  if (required) opt->required();
}
void add_format(CLI::App* app, Options& o, std::vector<std::string> choices) {
  app->add_option("--format", o.format, "Output format")->check(CLI::IsMember(choices))->default_str(choices.front());
}
void add_parallelism(CLI::App* app, Options& o) {
  app->add_option("--parallelism", o.parallelism, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}
void add_max_n(CLI::App* app, Options& o) {
  app->add_option("--max-exhaustive-n", o.max_exhaustive_n, "Largest n for full scans of S_n")->capture_default_str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.seed = default_seed();

  CLI::App app{"Breakpoint-distance geodesics on symmetric groups", "breakgeo"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto* dist = app.add_subcommand("dist", "Breakpoint distance between two permutations");
  dist->add_option("x", o.x, "First permutation")->required();
  dist->add_option("y", o.y, "Second permutation")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify the adjacencies of a permutation against a segment set");
  add_perms(classify_cmd, o, "Permutation to classify");
  add_segments(classify_cmd, o, true);
  classify_cmd->add_option("--format", o.format, "Output format (text or json)")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");

  auto* seg = app.add_subcommand("segments", "Segment-set counting, sampling and point classes");
  seg->require_subcommand(1);
  auto* seg_count = seg->add_subcommand("count", "Segment sets of id with m adjacencies and k segments");
  add_nm(seg_count, o);
  add_k(seg_count, o, true);
  auto* seg_prob = seg->add_subcommand("prob", "Probability that a uniform m-subset of A_id has k segments");
  add_nm(seg_prob, o);
  add_k(seg_prob, o, true);
  auto* seg_sample = seg->add_subcommand("sample", "Draw a segment set of id");
  add_nm(seg_sample, o);
  add_k(seg_sample, o, false);
  add_seed(seg_sample, o);
  auto* seg_points = seg->add_subcommand("points", "End, intrinsic and isolated points of a segment set");
  add_n(seg_points, o);
  add_segments(seg_points, o, true);
  auto* seg_complement = seg->add_subcommand("complement", "Runs of a permutation outside a segment set");
  add_perms(seg_complement, o, "Base permutation");
  add_segments(seg_complement, o, true);

  auto* moments = app.add_subcommand("moments", "Expectations and variances of the four class counts");
  add_nm(moments, o);
  add_k(moments, o, false);
  auto* mode = moments->add_option_group("mode");
  mode->add_flag("--exact", o.exact, "Closed forms in exact arithmetic (default)");
  mode->add_flag("--mc", o.mc, "Monte Carlo estimate against the closed forms");
  mode->add_flag("--exhaustive", o.exhaustive, "Full enumeration of S_n");
  mode->require_option(0, 1);
  moments->add_option("--samples", o.samples, "Monte Carlo samples")->check(CLI::PositiveNumber)->capture_default_str();
  add_seed(moments, o);
  add_parallelism(moments, o);
  moments->add_flag("--fixed-segments", o.fixed_segments, "Draw one segment set for the whole run (needs --k)");
  add_segments(moments, o, false);
  add_format(moments, o, {"json", "csv"});
  add_max_n(moments, o);

  auto* figure = app.add_subcommand("figure", "Normalized expected class counts across m");
  add_n(figure, o);
  figure->add_option("--steps", o.steps, "Grid steps; rows at m = round(j n / steps)")->capture_default_str();
  add_format(figure, o, {"json", "csv"});

  auto* geodesics = app.add_subcommand("geodesics", "All classes on geodesics between two permutations");
  add_perms(geodesics, o, "The two endpoints (give twice)");
  add_max_n(geodesics, o);

  auto* xn = app.add_subcommand("xn", "Counts and membership for the completion set X_n(I)");
  xn->require_subcommand(1);
  auto* xn_closed = xn->add_subcommand("closed", "Reference closed form for |X_n(I)|");
  add_nm(xn_closed, o);
  add_k(xn_closed, o, true);
  auto* xn_containing = xn->add_subcommand("containing", "Permutations containing a segment set: 2^k (n-m)!");
  add_nm(xn_containing, o);
  add_k(xn_containing, o, true);
  auto* xn_exact = xn->add_subcommand("exact", "|X_n(I)| by membership over S_n");
  add_n(xn_exact, o);
  add_segments(xn_exact, o, true);
  add_parallelism(xn_exact, o);
  add_max_n(xn_exact, o);
  auto* xn_union = xn->add_subcommand("union", "|X_n(I)| by containment of every completion J");
  add_n(xn_union, o);
  add_segments(xn_union, o, true);
  add_parallelism(xn_union, o);
  add_max_n(xn_union, o);
  auto* xn_pairs = xn->add_subcommand("pairs", "Number of (J, x) pairs with J contained in x");
  add_n(xn_pairs, o);
  add_segments(xn_pairs, o, true);
  add_max_n(xn_pairs, o);
  auto* xn_member = xn->add_subcommand("member", "Witness that a permutation lies in X_n(I)");
  add_perms(xn_member, o, "Candidate permutation");
  add_segments(xn_member, o, true);
  auto* xn_bound = xn->add_subcommand("bound", "Reference probability bound for a random I_m");
  add_nm(xn_bound, o);

  auto* access = app.add_subcommand("access", "Geodesic closure of a set of permutation classes");
  add_perms(access, o, "Member of the starting set (repeatable)");
  add_max_n(access, o);

  auto* median = app.add_subcommand("median", "Brute-force breakpoint medians");
  add_perms(median, o, "Input permutation (repeatable)");
  add_max_n(median, o);

  auto* far = app.add_subcommand("far-geodesic", "Geodesic points far from both id and x");
  add_perms(far, o, "Test this permutation instead of sampling");
  far->add_option("--n", o.n, "Permutation size for sampling or --exhaustive");
  far->add_option("--epsilon", o.epsilon, "Distance scale; both distances must reach ceil(epsilon n)")
      ->capture_default_str();
  far->add_option("--samples", o.samples, "Random permutations to test")->check(CLI::PositiveNumber)->capture_default_str();
  add_seed(far, o);
  add_parallelism(far, o);
  far->add_flag("--exhaustive", o.exhaustive, "Exact fraction over all of S_n");
  add_max_n(far, o);
  far->add_option("--max-search-n", o.max_search_n, "Largest n for the path search")->capture_default_str();

  auto* limits = app.add_subcommand("limits", "Limit curves and the feasibility region at c = m/n");
  limits->add_option("--c", o.c, "Limit of m/n")->required();
  limits->add_option("--c-prime", o.c_prime, "Limit of k/n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  if (*dist) {
    out << bp_distance(parse_permutation(o.x), parse_permutation(o.y)) << "\n";
  } else if (*classify_cmd) {
    const auto x = one_perm(o);
    const auto segments = parse_segment_set(o.segments, x.size());
    const auto c = classify(x, segments);
    if (o.format == "json") {
      print(out, classification_json(x, segments, c));
    } else {
      for (std::size_t i = 0; i < c.labels.size(); ++i) {
        out << i + 1 << ": {" << x[i] << "," << x[i + 1] << "} " << to_string(c.labels[i]) << "\n";
      }
      out << "counts: " << c.counts.alpha << " " << c.counts.beta << " " << c.counts.gamma << " " << c.counts.delta
          << "\n";
    }
  } else if (*seg_count) {
    out << count_segment_sets(o.n, o.m, *o.k).get_str() << "\n";
  } else if (*seg_prob) {
    const auto p = segment_count_probability(o.n, o.m, *o.k);
    print(out, Json{{"exact", rational_string(p)}, {"decimal", to_double(p)}});
  } else if (*seg_sample) {
    RandomStream rng(o.seed, 0);
    const auto s = sample_segment_set(o.n, o.m, o.k, rng);
    print(out, Json{{"segments", s.to_string()}, {"m", s.adjacency_count()}, {"k", s.segment_count()}});
  } else if (*seg_points) {
    const auto pc = point_classes(parse_segment_set(o.segments, o.n));
    print(out, Json{{"end", pc.end_points}, {"intrinsic", pc.intrinsic_points}, {"isolated", pc.isolated_points}});
  } else if (*seg_complement) {
    const auto pi = one_perm(o);
    const auto runs = complement_runs(pi, parse_segment_set(o.segments, pi.size()));
    Json list = Json::array();
    for (const auto& s : runs) list.push_back(s.to_string());
    print(out, Json{{"runs", list}});
  } else if (*moments) {
    if (o.mc) {
      ExperimentConfig cfg;
      cfg.n = o.n;
      cfg.m = o.m;
      cfg.k = o.k;
      cfg.samples = o.samples;
      cfg.seed = o.seed;
      cfg.parallelism = o.parallelism;
      cfg.fresh_segments = !o.fixed_segments;
      const auto report = mc_moments(cfg);
      if (o.format == "csv") {
        out << mc_csv_header() << "\n" << mc_csv_row(report) << "\n";
      } else {
        print(out, mc_report_json(report));
      }
    } else if (o.exhaustive) {
      ExactMoments em;
      Json extra;
      if (!o.segments.empty()) {
        const auto s = parse_segment_set(o.segments, o.n);
        em = exhaustive_moments(s, o.max_exhaustive_n, o.parallelism);
        extra["segments"] = s.to_string();
        o.m = s.adjacency_count();
        o.k = s.segment_count();
      } else if (o.k) {
        const auto s = leftmost_segment_set(o.n, o.m, *o.k);
        em = exhaustive_moments(s, o.max_exhaustive_n, o.parallelism);
        extra["segments"] = s.to_string();
      } else {
        em = exhaustive_moments_unconditional(o.n, o.m, o.max_exhaustive_n, o.parallelism);
      }
      Json j = moments_json(o.n, o.m, o.k, em.mean, em.var);
      for (auto& [key, value] : extra.items()) j[key] = value;
      print(out, j);
    } else if (o.k) {
      print(out, moments_json(o.n, o.m, o.k, expected_counts_conditional(o.n, o.m, *o.k),
                              variance_counts_conditional(o.n, o.m, *o.k)));
    } else {
      print(out, moments_json(o.n, o.m, o.k, expected_counts_unconditional(o.n, o.m),
                              variance_counts_unconditional(o.n, o.m)));
    }
  } else if (*figure) {
    const auto rows = figure_curves(o.n, o.steps);
    if (o.format == "csv") {
      out << figure_csv(o.n, rows);
    } else {
      print(out, figure_json(o.n, o.steps, rows));
    }
  } else if (*geodesics) {
    const auto perms = all_perms(o);
    if (perms.size() != 2) throw Error(ErrorKind::ParseError, "geodesics needs exactly two --perm values");
    const auto set = enumerate_geodesic_points(perms[0], perms[1], o.max_exhaustive_n);
    print(out, Json{{"distance", bp_distance(perms[0], perms[1])}, {"count", set.size()}, {"classes", class_set_json(set)}});
  } else if (*xn_closed) {
    out << xn_closed_form(o.n, o.m, *o.k).get_str() << "\n";
  } else if (*xn_containing) {
    out << count_containing(o.n, o.m, *o.k).get_str() << "\n";
  } else if (*xn_exact) {
    out << xn_exact_count(parse_segment_set(o.segments, o.n), o.max_exhaustive_n, o.parallelism).get_str() << "\n";
  } else if (*xn_union) {
    out << xn_union_count(parse_segment_set(o.segments, o.n), o.max_exhaustive_n, o.parallelism).get_str() << "\n";
  } else if (*xn_pairs) {
    out << xn_pair_count_oracle(parse_segment_set(o.segments, o.n), o.max_exhaustive_n).get_str() << "\n";
  } else if (*xn_member) {
    const auto x = one_perm(o);
    const auto segments = parse_segment_set(o.segments, x.size());
    const auto w = xn_membership(x, segments);
    Json j;
    j["member"] = w.has_value();
    j["witness"] = w ? witness_json(*w) : Json(nullptr);
    j["free_core"] = free_core(x, segments).to_string();
    j["deficiency"] = deficiency(x, segments);
    print(out, j);
  } else if (*xn_bound) {
    const auto p = xn_probability_bound(o.n, o.m);
    print(out, Json{{"exact", rational_string(p)}, {"decimal", to_double(p)}});
  } else if (*access) {
    const auto start = to_class_set(all_perms(o));
    const auto closure = accessible_closure(start, o.max_exhaustive_n);
    const auto chains = one_step_accessible(start, o.max_exhaustive_n);
    print(out, Json{{"closure", class_set_json(closure.classes)},
                    {"order", closure.order},
                    {"chain_reachable", class_set_json(chains)}});
  } else if (*median) {
    print(out, median_json(medians_bruteforce(all_perms(o), o.max_exhaustive_n)));
  } else if (*far) {
    if (!o.perms.empty()) {
      const auto x = one_perm(o);
      const auto r = far_geodesic_exists(x, o.epsilon, o.max_search_n);
      print(out, Json{{"perm", x.to_string()},
                      {"threshold", far_threshold(x.size(), o.epsilon)},
                      {"exists", r.exists},
                      {"witness", r.witness ? Json(r.witness->to_string()) : Json(nullptr)}});
    } else if (o.n == 0) {
      throw Error(ErrorKind::ParseError, "far-geodesic needs --perm or --n");
    } else if (o.exhaustive) {
      const auto f = far_geodesic_fraction_exhaustive(o.n, o.epsilon, o.max_exhaustive_n, o.parallelism);
      print(out, Json{{"n", o.n}, {"epsilon", o.epsilon}, {"exact", rational_string(f)}, {"decimal", to_double(f)}});
    } else {
      const auto p = far_geodesic_probability(o.n, o.epsilon, o.samples, o.seed, o.parallelism, o.max_search_n);
      Json j{{"n", o.n}, {"epsilon", o.epsilon}, {"seed", o.seed}};
      const Json body = proportion_json(p);
      for (const auto& [key, value] : body.items()) j[key] = value;
      print(out, j);
    }
  } else if (*limits) {
    const auto lim = asymptotic_limits(o.c, o.c_prime);
    Json j;
    j["c"] = o.c;
    Json unc = Json::object();
    for (int t = 0; t < 4; ++t) unc[kClassNames[t]] = lim.unconditional[t];
    j["unconditional"] = unc;
    const auto lead = leading_variance_coefficients(o.c);
    Json var = Json::object();
    for (int t = 0; t < 4; ++t) var[kClassNames[t]] = lead[t];
    j["variance_leading"] = var;
    if (o.c_prime) {
      j["c_prime"] = *o.c_prime;
      Json cond = Json::object();
      for (int t = 0; t < 4; ++t) cond[kClassNames[t]] = (*lim.conditional)[t];
      j["conditional"] = cond;
      const auto f = feasibility_check(o.c, *o.c_prime);
      j["feasible"] = f.feasible;
      j["violated"] = f.violated;
    }
    print(out, j);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::TooLarge ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace breakgeo
