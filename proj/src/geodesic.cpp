#include "breakgeo/geodesic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "breakgeo/classify.hpp"
#include "breakgeo/error.hpp"
#include "breakgeo/kernels.hpp"
#include "breakgeo/path_assembly.hpp"

namespace breakgeo {

namespace {

void require_same_size(int a, int b) {
  if (a != b) {
    throw Error(ErrorKind::SizeMismatch, "sizes " + std::to_string(a) + " and " + std::to_string(b));
  }
}

void require_at_most(int n, int max_n, const char* what) {
  if (n > max_n) {
    throw Error(ErrorKind::TooLarge, std::string(what) + " needs n <= " + std::to_string(max_n) + ", got n = " +
                                         std::to_string(n));
  }
  if (n > kMaskMaxN) {
    throw Error(ErrorKind::TooLarge, std::string(what) + " supports n <= " + std::to_string(kMaskMaxN));
  }
}

AdjMask mask_of(const AdjacencySet& pairs) {
  AdjMask m = 0;
  for (const auto& a : pairs) m |= AdjMask{1} << pair_index(a.lo, a.hi);
  return m;
}

/// Number of paths in a linear forest given by its edge mask.
int component_count(AdjMask edges, int n) {
  std::uint32_t touched = 0;
  for (int b = 2; b <= n; ++b) {
    for (int a = 1; a < b; ++a) {
      if (edges >> pair_index(a, b) & 1) touched |= (1u << a) | (1u << b);
    }
  }
  return std::popcount(touched) - std::popcount(edges);
}

}  // namespace

bool is_geodesic_point(const Permutation& pi, const Permutation& x, const Permutation& y) {
  require_same_size(pi.size(), x.size());
  require_same_size(x.size(), y.size());
  return bp_distance(x, pi) + bp_distance(pi, y) == bp_distance(x, y);
}

bool satisfies_adjacency_sandwich(const Permutation& pi, const Permutation& x, const Permutation& y) {
  require_same_size(pi.size(), x.size());
  require_same_size(x.size(), y.size());
  const auto ax = adjacency_set(x), ay = adjacency_set(y), ap = adjacency_set(pi);
  return ax.intersection_with(ay).is_subset_of(ap) && ap.is_subset_of(ax.union_with(ay));
}

int pair_index(int a, int b) {
  if (a > b) std::swap(a, b);
  return (b - 1) * (b - 2) / 2 + (a - 1);
}

AdjMask adjacency_mask(std::span<const int> values) {
  AdjMask m = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) m |= AdjMask{1} << pair_index(values[i], values[i + 1]);
  return m;
}

int ClassSpace::index_of(const Permutation& x) const {
  require_same_size(x.size(), n);
  return index.at(adjacency_mask(x.values()));
}

ClassSpace build_class_space(int n, int max_n) {
  require_at_most(n, max_n, "class-space scan");
  if (n < 2) throw Error(ErrorKind::TooShort, "n must be >= 2, got " + std::to_string(n));
  ClassSpace space;
  space.n = n;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    if (!is_canonical(v)) continue;
    const AdjMask m = adjacency_mask(v);
    space.index.emplace(m, static_cast<int>(space.reps.size()));
    space.reps.emplace_back(v);
    space.masks.push_back(m);
  } while (std::next_permutation(v.begin(), v.end()));
  return space;
}

std::vector<int> geodesic_indices(const ClassSpace& space, int a, int b) {
  const AdjMask ma = space.masks[a], mb = space.masks[b];
  const AdjMask common = ma & mb, either = ma | mb;
  std::vector<int> out;
  for (std::size_t z = 0; z < space.masks.size(); ++z) {
    const AdjMask mz = space.masks[z];
    if ((common & ~mz) == 0 && (mz & ~either) == 0) out.push_back(static_cast<int>(z));
  }
  return out;
}

GeodesicSet enumerate_geodesic_points(const Permutation& x, const Permutation& y, int max_n) {
  require_same_size(x.size(), y.size());
  require_at_most(x.size(), max_n, "geodesic enumeration");
  GeodesicSet out;
  std::vector<int> v(x.size());
  std::iota(v.begin(), v.end(), 1);
  do {
    if (!is_canonical(v)) continue;
    Permutation z(v);
    if (is_geodesic_point(z, x, y)) out.insert(std::move(z));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::I: return "i";
    case CaseTag::II: return "ii";
    case CaseTag::III: return "iii";
  }
  return "?";
}

std::optional<WitnessGeodesic> xn_membership(const Permutation& x, const SegmentSet& segments) {
  require_same_size(x.size(), segments.n());
  const auto labels = classify(x, segments).labels;
  const auto inner = segments.adjacencies();
  AssemblyRequest req;
  req.n = x.size();
  std::vector<Adjacency> forced(inner.begin(), inner.end());
  for (int i = 0; i + 1 < x.size(); ++i) {
    const auto a = make_adjacency(x[i], x[i + 1]);
    switch (labels[i]) {
      case AdjacencyClass::TwoFreeEnd: forced.push_back(a); break;
      case AdjacencyClass::OneFreeEnd:
      case AdjacencyClass::TrivialSegment:
        if (!inner.contains(a)) req.optional.push_back({a, 0});
        break;
      case AdjacencyClass::ZeroFreeEnd: break;
    }
  }
  req.forced = AdjacencySet(std::move(forced));
  auto pi = assemble_path(req);
  if (!pi) return std::nullopt;
  auto j_set = decompose(*pi, adjacency_set(*pi).minus(inner));
  const int diff = j_set.segment_count() - segments.segment_count();
  CaseTag tag;
  switch (diff) {
    case -1: tag = CaseTag::I; break;
    case 0: tag = CaseTag::II; break;
    case 1: tag = CaseTag::III; break;
    default: throw std::logic_error("segment counts of I and J differ by " + std::to_string(diff));
  }
  return WitnessGeodesic{std::move(*pi), std::move(j_set), tag};
}

std::optional<ComplementMatch> match_complement_conditions(const SegmentSet& segments, const SegmentSet& j_set) {
  require_same_size(segments.n(), j_set.n());
  const int n = segments.n();
  const auto ci = point_classes(segments).of;
  const auto cj = point_classes(j_set).of;
  auto is = [](const std::vector<PointClass>& c, int v, PointClass k) { return c[v] == k; };
  using PC = PointClass;
  std::vector<int> end_i_iso_j, end_j_iso_i;
  for (int v = 1; v <= n; ++v) {
    if (is(ci, v, PC::End) && is(cj, v, PC::Isolated)) end_i_iso_j.push_back(v);
    if (is(cj, v, PC::End) && is(ci, v, PC::Isolated)) end_j_iso_i.push_back(v);
  }
  const int diff = j_set.segment_count() - segments.segment_count();
  ComplementMatch match;
  auto all = [&](auto&& pred) {
    for (int v = 1; v <= n; ++v) {
      if (!pred(v)) return false;
    }
    return true;
  };
  if (diff == -1) {
    if (end_i_iso_j.size() != 2) return std::nullopt;
    match = {CaseTag::I, end_i_iso_j[0], end_i_iso_j[1]};
    auto special = [&](int v) { return v == match.q || v == match.r; };
    const bool ok = all([&](int v) {
      return is(cj, v, PC::Intrinsic) == is(ci, v, PC::Isolated) &&
             (is(cj, v, PC::Isolated) && !special(v)) == is(ci, v, PC::Intrinsic) &&
             is(cj, v, PC::End) == (is(ci, v, PC::End) && !special(v));
    });
    return ok ? std::optional(match) : std::nullopt;
  }
  if (diff == 0) {
    if (end_j_iso_i.size() != 1 || end_i_iso_j.size() != 1) return std::nullopt;
    match = {CaseTag::II, end_i_iso_j[0], end_j_iso_i[0]};
    const bool ok = all([&](int v) {
      return is(cj, v, PC::Intrinsic) == (is(ci, v, PC::Isolated) && v != match.r) &&
             (is(cj, v, PC::Isolated) && v != match.q) == is(ci, v, PC::Intrinsic) &&
             (is(cj, v, PC::End) && v != match.r) == (is(ci, v, PC::End) && v != match.q);
    });
    return ok ? std::optional(match) : std::nullopt;
  }
  if (diff == 1) {
    if (end_j_iso_i.size() != 2) return std::nullopt;
    match = {CaseTag::III, end_j_iso_i[0], end_j_iso_i[1]};
    auto special = [&](int v) { return v == match.q || v == match.r; };
    const bool ok = all([&](int v) {
      return is(cj, v, PC::Intrinsic) == (is(ci, v, PC::Isolated) && !special(v)) &&
             is(cj, v, PC::Isolated) == is(ci, v, PC::Intrinsic) &&
             (is(cj, v, PC::End) && !special(v)) == is(ci, v, PC::End);
    });
    return ok ? std::optional(match) : std::nullopt;
  }
  return std::nullopt;
}

bool completes_to_path(const SegmentSet& segments, const SegmentSet& j_set) {
  require_same_size(segments.n(), j_set.n());
  const auto a = segments.adjacencies(), b = j_set.adjacencies();
  if (a.intersection_size(b) != 0) return false;
  const auto both = a.union_with(b);
  if (static_cast<int>(both.size()) != segments.n() - 1) return false;
  try {
    return segment_set_from_adjacencies(segments.n(), both).segment_count() == 1;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::string> validate_witness(const Permutation& x, const SegmentSet& segments, const WitnessGeodesic& w) {
  std::vector<std::string> problems;
  const auto ap = adjacency_set(w.pi);
  const auto inner = segments.adjacencies();
  const auto j = w.j_set.adjacencies();
  if (!inner.is_subset_of(ap)) problems.push_back("I is not contained in pi");
  if (j != ap.minus(inner)) problems.push_back("J differs from A_pi \\ I");
  if (!j.is_subset_of(adjacency_set(x))) problems.push_back("J is not contained in x");
  if (inner.intersection_size(j) != 0) problems.push_back("I and J share an adjacency");
  if (!completes_to_path(segments, w.j_set)) problems.push_back("I and J do not form a single path");
  const auto match = match_complement_conditions(segments, w.j_set);
  if (!match) {
    problems.push_back("End/Int/Iso conditions fail");
  } else {
    if (match->case_tag != w.case_tag) problems.push_back("case tag disagrees with the conditions");
    const int first = w.pi[0], last = w.pi[w.pi.size() - 1];
    const bool ends = (match->q == first && match->r == last) || (match->q == last && match->r == first);
    if (!ends) problems.push_back("q, r are not the extremities of pi");
  }
  return problems;
}

BigInt xn_exact_count(const SegmentSet& segments, int max_n, int threads) {
  const int n = segments.n();
  require_at_most(n, max_n, "exact membership count");
  const std::uint64_t count = scan_parallel(
      n, std::uint64_t{0},
      [&](std::uint64_t& acc, std::span<const int> v) {
        if (xn_membership(Permutation(std::vector<int>(v.begin(), v.end())), segments)) ++acc;
      },
      [](std::uint64_t& into, std::uint64_t from) { into += from; }, threads);
  return BigInt(static_cast<unsigned long>(count));
}

namespace {

std::vector<AdjMask> completion_masks(const SegmentSet& segments) {
  const int n = segments.n();
  const AdjMask inner = mask_of(segments.adjacencies());
  std::vector<AdjMask> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    if (!is_canonical(v)) continue;
    const AdjMask m = adjacency_mask(v);
    if ((m & inner) == inner) out.push_back(m & ~inner);
  } while (std::next_permutation(v.begin(), v.end()));
  std::sort(out.begin(), out.end(),
            [](AdjMask a, AdjMask b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b; });
  return out;
}

}  // namespace

BigInt xn_union_count(const SegmentSet& segments, int max_n, int threads) {
  const int n = segments.n();
  require_at_most(n, max_n, "union count");
  const auto js = completion_masks(segments);
  const std::uint64_t count = scan_parallel(
      n, std::uint64_t{0},
      [&](std::uint64_t& acc, std::span<const int> v) {
        const AdjMask mx = adjacency_mask(v);
        for (AdjMask j : js) {
          if ((j & ~mx) == 0) {
            ++acc;
            return;
          }
        }
      },
      [](std::uint64_t& into, std::uint64_t from) { into += from; }, threads);
  return BigInt(static_cast<unsigned long>(count));
}

BigInt xn_pair_count_oracle(const SegmentSet& segments, int max_n) {
  const int n = segments.n();
  require_at_most(n, max_n, "pair count");
  BigInt total = 0;
  for (AdjMask j : completion_masks(segments)) {
    const int size = std::popcount(j);
    const int parts = component_count(j, n);
    total += (BigInt(1) << parts) * factorial(n - size);
  }
  return total;
}

namespace {

void require_conditional(int n, int m, int k) {
  if (k < 1 || m < k || m > n - k) {
    throw Error(ErrorKind::InvalidRange, "need 1 <= k <= m <= n-k, got n=" + std::to_string(n) +
                                             " m=" + std::to_string(m) + " k=" + std::to_string(k));
  }
}

}  // namespace

BigInt xn_closed_form(int n, int m, int k) {
  require_conditional(n, m, k);
  if (n - m - 2 < 0) return 0;
  const long free = n - m - k;
  Rational bracket = Rational(BigInt(k) * k * (k - 1) + BigInt(2 * k) * free) + Rational(BigInt(free) * (free - 1), k + 1);
  Rational value = Rational((BigInt(1) << k) * factorial(m + 1) * factorial(n - m - 2), factorial(k)) * bracket;
  value.canonicalize();
  if (value.get_den() != 1) {
    throw std::logic_error("closed form is not integral at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                           " k=" + std::to_string(k));
  }
  return value.get_num();
}

BigInt count_containing(int n, int m, int k) {
  require_conditional(n, m, k);
  return (BigInt(1) << k) * factorial(n - m);
}

int far_threshold(int n, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorKind::InvalidRange, "epsilon must lie in (0, 1), got " + std::to_string(epsilon));
  }
  return static_cast<int>(std::ceil(epsilon * n - 1e-9));
}

FarGeodesic far_geodesic_exists(const Permutation& x, double epsilon, int max_n) {
  const int n = x.size();
  const int t = far_threshold(n, epsilon);
  if (n > max_n) {
    throw Error(ErrorKind::TooLarge, "far-geodesic search needs n <= " + std::to_string(max_n) + ", got n = " +
                                         std::to_string(n));
  }
  const auto ax = adjacency_set(x);
  const auto aid = adjacency_set(Permutation::identity(n));
  AssemblyRequest req;
  req.n = n;
  req.forced = ax.intersection_with(aid);
  // d(pi, x) counts id-only edges in pi; d(pi, id) counts x-only edges.
  for (const auto& a : aid.minus(ax)) req.optional.push_back({a, 0});
  for (const auto& a : ax.minus(aid)) req.optional.push_back({a, 1});
  req.min_label = {t, t};
  FarGeodesic out;
  if (auto pi = assemble_path(req)) {
    out.exists = true;
    out.witness = canonical_class(*pi);
  }
  return out;
}

}  // namespace breakgeo
