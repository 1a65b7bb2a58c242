#include "breakgeo/segment.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>

#include "breakgeo/error.hpp"

namespace breakgeo {

namespace {

void require_range(int n, int m, int k) {
  if (k < 1 || m < k || m > n - 1) {
    throw Error(ErrorKind::InvalidRange, "need 1 <= k <= m <= n-1, got n=" + std::to_string(n) +
                                             " m=" + std::to_string(m) + " k=" + std::to_string(k));
  }
}

}  // namespace

Segment::Segment(std::vector<int> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw Error(ErrorKind::InvalidSegmentSet, "a segment needs at least two points");
  std::vector<int> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(ErrorKind::InvalidSegmentSet, "point '" + std::to_string(*dup) + "' repeats in " + to_string());
  }
  if (points_.front() > points_.back()) std::reverse(points_.begin(), points_.end());
}

int Segment::min_point() const { return *std::min_element(points_.begin(), points_.end()); }

std::vector<Adjacency> Segment::adjacencies() const {
  std::vector<Adjacency> out;
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) out.push_back(make_adjacency(points_[i], points_[i + 1]));
  return out;
}

std::string Segment::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(points_[i]);
  }
  return out + "]";
}

SegmentSet::SegmentSet(int n, std::vector<Segment> segments) : n_(n), segments_(std::move(segments)) {
  std::vector<bool> used(std::max(n, 0) + 1, false);
  for (const auto& s : segments_) {
    for (int p : s.points()) {
      if (p < 1 || p > n) {
        throw Error(ErrorKind::OutOfRange, "point '" + std::to_string(p) + "' is outside [1, " + std::to_string(n) + "]");
      }
      if (used[p]) {
        throw Error(ErrorKind::InvalidSegmentSet,
                    "point '" + std::to_string(p) + "' is shared by two segments");
      }
      used[p] = true;
    }
  }
  std::sort(segments_.begin(), segments_.end(),
            [](const Segment& a, const Segment& b) { return a.min_point() < b.min_point(); });
}

int SegmentSet::adjacency_count() const {
  int total = 0;
  for (const auto& s : segments_) total += s.length();
  return total;
}

AdjacencySet SegmentSet::adjacencies() const {
  std::vector<Adjacency> pairs;
  for (const auto& s : segments_) {
    auto a = s.adjacencies();
    pairs.insert(pairs.end(), a.begin(), a.end());
  }
  return AdjacencySet(std::move(pairs));
}

std::string SegmentSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += ';';
    out += segments_[i].to_string();
  }
  return out;
}

SegmentSet parse_segment_set(std::string_view text, int n) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact += c;
  }
  std::vector<Segment> segments;
  std::size_t i = 0;
  while (i < compact.size()) {
    if (compact[i] == ';') {
      ++i;
      continue;
    }
    if (compact[i] != '[') {
      throw Error(ErrorKind::ParseError, "expected '[' at '" + compact.substr(i) + "'");
    }
    const auto close = compact.find(']', i);
    if (close == std::string::npos) throw Error(ErrorKind::ParseError, "unclosed segment '" + compact.substr(i) + "'");
    const std::string body = compact.substr(i + 1, close - i - 1);
    std::vector<int> points;
    std::size_t j = 0;
    while (j <= body.size()) {
      auto comma = body.find(',', j);
      if (comma == std::string::npos) comma = body.size();
      const std::string token = body.substr(j, comma - j);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw Error(ErrorKind::ParseError, "token '" + token + "' in segment '[" + body + "]' is not a natural number");
      }
      points.push_back(value);
      j = comma + 1;
    }
    segments.emplace_back(std::move(points));
    i = close + 1;
  }
  return SegmentSet(n, std::move(segments));
}

SegmentSet segment_set_from_adjacencies(int n, const AdjacencySet& pairs) {
  std::vector<std::vector<int>> nbr(n + 1);
  for (const auto& a : pairs) {
    if (a.lo < 1 || a.hi > n) {
      throw Error(ErrorKind::OutOfRange, "pair {" + std::to_string(a.lo) + "," + std::to_string(a.hi) + "} outside [1, " +
                                             std::to_string(n) + "]");
    }
    nbr[a.lo].push_back(a.hi);
    nbr[a.hi].push_back(a.lo);
  }
  for (int v = 1; v <= n; ++v) {
    if (nbr[v].size() > 2) {
      throw Error(ErrorKind::InvalidSegmentSet, "point '" + std::to_string(v) + "' lies on more than two pairs");
    }
  }
  std::vector<bool> seen(n + 1, false);
  std::vector<Segment> segments;
  std::size_t covered = 0;
  for (int v = 1; v <= n; ++v) {
    if (seen[v] || nbr[v].size() != 1) continue;
    std::vector<int> path{v};
    seen[v] = true;
    int prev = 0, cur = v;
    while (true) {
      int next = 0;
      for (int w : nbr[cur]) {
        if (w != prev) next = w;
      }
      if (next == 0) break;
      prev = cur;
      cur = next;
      seen[cur] = true;
      path.push_back(cur);
    }
    covered += path.size() - 1;
    segments.emplace_back(std::move(path));
  }
  if (covered != pairs.size()) throw Error(ErrorKind::InvalidSegmentSet, "pairs " + pairs.to_string() + " contain a cycle");
  return SegmentSet(n, std::move(segments));
}

namespace {

std::vector<Segment> runs_of(const Permutation& pi, const AdjacencySet& subset) {
  const auto own = adjacency_set(pi);
  for (const auto& a : subset) {
    if (!own.contains(a)) {
      throw Error(ErrorKind::NotContained, "pair {" + std::to_string(a.lo) + "," + std::to_string(a.hi) +
                                               "} is not an adjacency of " + pi.to_string());
    }
  }
  std::vector<Segment> out;
  std::vector<int> run;
  for (int i = 0; i + 1 < pi.size(); ++i) {
    if (subset.contains(pi[i], pi[i + 1])) {
      if (run.empty()) run.push_back(pi[i]);
      run.push_back(pi[i + 1]);
    } else if (!run.empty()) {
      out.emplace_back(std::move(run));
      run.clear();
    }
  }
  if (!run.empty()) out.emplace_back(std::move(run));
  return out;
}

}  // namespace

SegmentSet decompose(const Permutation& pi, const AdjacencySet& subset) {
  return SegmentSet(pi.size(), runs_of(pi, subset));
}

PointClasses point_classes(const SegmentSet& segments) {
  const int n = segments.n();
  PointClasses pc;
  pc.of.assign(n + 1, PointClass::Isolated);
  for (const auto& s : segments.segments()) {
    const auto& pts = s.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      pc.of[pts[i]] = (i == 0 || i + 1 == pts.size()) ? PointClass::End : PointClass::Intrinsic;
    }
  }
  for (int v = 1; v <= n; ++v) {
    switch (pc.of[v]) {
      case PointClass::End: pc.end_points.push_back(v); break;
      case PointClass::Intrinsic: pc.intrinsic_points.push_back(v); break;
      case PointClass::Isolated: pc.isolated_points.push_back(v); break;
    }
  }
  return pc;
}

std::vector<Segment> complement_runs(const Permutation& pi, const SegmentSet& segments) {
  if (segments.n() != pi.size()) {
    throw Error(ErrorKind::SizeMismatch, "segment set over " + std::to_string(segments.n()) + " vs permutation of size " +
                                             std::to_string(pi.size()));
  }
  const auto own = adjacency_set(pi);
  const auto inner = segments.adjacencies();
  if (!inner.is_subset_of(own)) {
    throw Error(ErrorKind::NotContained, segments.to_string() + " is not contained in " + pi.to_string());
  }
  return runs_of(pi, own.minus(inner));
}

SegmentSet complement_in(const Permutation& pi, const SegmentSet& segments) {
  return SegmentSet(pi.size(), complement_runs(pi, segments));
}

BigInt count_segment_sets(int n, int m, int k) {
  require_range(n, m, k);
  if (m > n - k) return 0;
  return binomial(m - 1, k - 1) * binomial(n - m, k);
}

Rational segment_count_probability(int n, int m, int k) {
  Rational p(count_segment_sets(n, m, k), binomial(n - 1, m));
  p.canonicalize();
  return p;
}

namespace {

/// Sorted uniform r-subset of {0..size-1}.
std::vector<int> sample_indices(int size, int r, RandomStream& rng) {
  std::vector<int> all(size);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> out;
  out.reserve(r);
  std::sample(all.begin(), all.end(), std::back_inserter(out), r, rng);
  return out;
}

}  // namespace

SegmentSet sample_segment_set(int n, int m, std::optional<int> k, RandomStream& rng) {
  if (m < 1 || m > n - 1) {
    throw Error(ErrorKind::InvalidRange, "need 1 <= m <= n-1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  if (!k) {
    std::vector<Adjacency> pairs;
    for (int j : sample_indices(n - 1, m, rng)) pairs.push_back({j + 1, j + 2});
    return segment_set_from_adjacencies(n, AdjacencySet(std::move(pairs)));
  }
  const int kk = *k;
  if (count_segment_sets(n, m, kk) == 0) {
    throw Error(ErrorKind::InvalidRange, "no segment set with n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                             " k=" + std::to_string(kk));
  }
  // Lengths: composition of m into kk parts.
  std::vector<int> lengths;
  int last = 0;
  for (int c : sample_indices(m - 1, kk - 1, rng)) {
    lengths.push_back(c + 1 - last);
    last = c + 1;
  }
  lengths.push_back(m - last);
  // Gaps: n-1-m unused adjacencies in kk+1 bins, interior bins nonempty.
  const auto bars = sample_indices(n - m, kk, rng);
  std::vector<int> gaps(kk + 1);
  gaps[0] = bars[0];
  for (int i = 1; i < kk; ++i) gaps[i] = bars[i] - bars[i - 1];
  gaps[kk] = n - m - 1 - bars[kk - 1];

  std::vector<Segment> segments;
  int pos = gaps[0];
  for (int i = 0; i < kk; ++i) {
    std::vector<int> pts(lengths[i] + 1);
    std::iota(pts.begin(), pts.end(), pos + 1);
    segments.emplace_back(std::move(pts));
    pos += lengths[i] + gaps[i + 1];
  }
  return SegmentSet(n, std::move(segments));
}

SegmentSet leftmost_segment_set(int n, int m, int k) {
  if (count_segment_sets(n, m, k) == 0) {
    throw Error(ErrorKind::InvalidRange, "no segment set with n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                             " k=" + std::to_string(k));
  }
  std::vector<Segment> segments;
  int start = 1;
  for (int i = 0; i < k; ++i) {
    const int len = i == 0 ? m - k + 1 : 1;
    std::vector<int> pts(len + 1);
    std::iota(pts.begin(), pts.end(), start);
    segments.emplace_back(std::move(pts));
    start += len + 1;
  }
  return SegmentSet(n, std::move(segments));
}

void for_each_identity_subset(int n, int m, const std::function<void(const SegmentSet&)>& fn) {
  const int slots = n - 1;
  if (m < 0 || m > slots || slots >= 63) {
    throw Error(ErrorKind::InvalidRange, "cannot enumerate " + std::to_string(m) + "-subsets of " + std::to_string(slots));
  }
  if (m == 0) {
    fn(SegmentSet::empty(n));
    return;
  }
  std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  const std::uint64_t limit = std::uint64_t{1} << slots;
  while (mask < limit) {
    std::vector<Segment> segments;
    std::vector<int> run;
    for (int j = 0; j <= slots; ++j) {
      if (j < slots && (mask >> j & 1)) {
        if (run.empty()) run.push_back(j + 1);
        run.push_back(j + 2);
      } else if (!run.empty()) {
        segments.emplace_back(std::move(run));
        run.clear();
      }
    }
    fn(SegmentSet(n, std::move(segments)));
    const std::uint64_t low = mask & -mask;
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

SegmentSet relabel(const SegmentSet& segments, const Permutation& z) {
  std::vector<Segment> out;
  for (const auto& s : segments.segments()) {
    std::vector<int> pts;
    for (int p : s.points()) pts.push_back(z[p - 1]);
    out.emplace_back(std::move(pts));
  }
  return SegmentSet(segments.n(), std::move(out));
}

}  // namespace breakgeo
