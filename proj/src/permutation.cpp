#include "breakgeo/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "breakgeo/error.hpp"

namespace breakgeo {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index)
    : state_(mix64(mix64(seed) ^ (index * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL))) {}

RandomStream::result_type RandomStream::operator()() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Adjacency make_adjacency(int a, int b) {
  return a < b ? Adjacency{a, b} : Adjacency{b, a};
}

AdjacencySet::AdjacencySet(std::vector<Adjacency> pairs) : pairs_(std::move(pairs)) {
  for (auto& p : pairs_) p = make_adjacency(p.lo, p.hi);
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool AdjacencySet::contains(Adjacency a) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), make_adjacency(a.lo, a.hi));
}

bool AdjacencySet::is_subset_of(const AdjacencySet& other) const {
  return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
}

std::size_t AdjacencySet::intersection_size(const AdjacencySet& other) const {
  return intersection_with(other).size();
}

AdjacencySet AdjacencySet::intersection_with(const AdjacencySet& other) const {
  AdjacencySet out;
  std::set_intersection(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(),
                        std::back_inserter(out.pairs_));
  return out;
}

AdjacencySet AdjacencySet::minus(const AdjacencySet& other) const {
  AdjacencySet out;
  std::set_difference(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(),
                      std::back_inserter(out.pairs_));
  return out;
}

AdjacencySet AdjacencySet::union_with(const AdjacencySet& other) const {
  AdjacencySet out;
  std::set_union(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(),
                 std::back_inserter(out.pairs_));
  return out;
}

std::string AdjacencySet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) os << ',';
    os << '{' << pairs_[i].lo << ',' << pairs_[i].hi << '}';
  }
  os << '}';
  return os.str();
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n < 2) throw Error(ErrorKind::TooShort, "a permutation needs n >= 2, got n = " + std::to_string(n));
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw Error(ErrorKind::OutOfRange,
                  "value '" + std::to_string(v) + "' is outside [1, " + std::to_string(n) + "]");
    }
    if (seen[v]) throw Error(ErrorKind::DuplicateValue, "value '" + std::to_string(v) + "' appears more than once");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(std::max(n, 0));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<int>(values_.rbegin(), values_.rend()));
}

std::vector<int> Permutation::positions() const {
  std::vector<int> pos(values_.size() + 1, -1);
  for (std::size_t i = 0; i < values_.size(); ++i) pos[values_[i]] = static_cast<int>(i);
  return pos;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != ',' && text[j] != '\t' && text[j] != '\n' &&
           text[j] != '\r') {
      ++j;
    }
    const std::string_view token = text.substr(i, j - i);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      if (ec == std::errc::result_out_of_range) {
        throw Error(ErrorKind::OutOfRange, "value '" + std::string(token) + "' is too large");
      }
      throw Error(ErrorKind::ParseError, "token '" + std::string(token) + "' is not a natural number");
    }
    values.push_back(value);
    i = j;
  }
  return Permutation(std::move(values));
}

AdjacencySet adjacency_set(std::span<const int> values) {
  std::vector<Adjacency> pairs;
  pairs.reserve(values.size());
  for (std::size_t i = 0; i + 1 < values.size(); ++i) pairs.push_back(make_adjacency(values[i], values[i + 1]));
  return AdjacencySet(std::move(pairs));
}

AdjacencySet adjacency_set(const Permutation& x) { return adjacency_set(x.values()); }

int common_adjacency_count(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::SizeMismatch,
                "permutations of size " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
  const auto pos = y.positions();
  int common = 0;
  for (int i = 0; i + 1 < x.size(); ++i) {
    if (std::abs(pos[x[i]] - pos[x[i + 1]]) == 1) ++common;
  }
  return common;
}

int bp_distance(const Permutation& x, const Permutation& y) {
  return x.size() - 1 - common_adjacency_count(x, y);
}

bool is_canonical(std::span<const int> values) { return values.front() < values.back(); }

Permutation canonical_class(const Permutation& x) {
  return is_canonical(x.values()) ? x : x.reversed();
}

Permutation compose(const Permutation& z, const Permutation& x) {
  if (z.size() != x.size()) {
    throw Error(ErrorKind::SizeMismatch,
                "permutations of size " + std::to_string(z.size()) + " and " + std::to_string(x.size()));
  }
  std::vector<int> out(x.size());
  for (int i = 0; i < x.size(); ++i) out[i] = z[x[i] - 1];
  return Permutation(std::move(out));
}

Permutation sample_uniform(int n, RandomStream& rng) {
  if (n < 2) throw Error(ErrorKind::TooShort, "n must be >= 2, got " + std::to_string(n));
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

}  // namespace breakgeo
