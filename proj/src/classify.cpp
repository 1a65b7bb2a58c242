#include "breakgeo/classify.hpp"

#include "breakgeo/error.hpp"

namespace breakgeo {

namespace {

void require_same_size(const Permutation& x, const SegmentSet& segments) {
  if (x.size() != segments.n()) {
    throw Error(ErrorKind::SizeMismatch, "permutation of size " + std::to_string(x.size()) + " vs segment set over " +
                                             std::to_string(segments.n()));
  }
}

}  // namespace

std::string_view to_string(AdjacencyClass c) {
  switch (c) {
    case AdjacencyClass::TwoFreeEnd: return "TwoFreeEnd";
    case AdjacencyClass::OneFreeEnd: return "OneFreeEnd";
    case AdjacencyClass::TrivialSegment: return "TrivialSegment";
    case AdjacencyClass::ZeroFreeEnd: return "ZeroFreeEnd";
  }
  return "?";
}

AdjacencyClass classify_pair(PointClass a, PointClass b) {
  if (a == PointClass::Intrinsic || b == PointClass::Intrinsic) return AdjacencyClass::ZeroFreeEnd;
  const int free = freedom(a) + freedom(b);
  if (free == 4) return AdjacencyClass::TwoFreeEnd;
  if (free == 3) return AdjacencyClass::OneFreeEnd;
  return AdjacencyClass::TrivialSegment;
}

namespace {

void tally(ClassCounts& c, AdjacencyClass label) {
  switch (label) {
    case AdjacencyClass::TwoFreeEnd: ++c.alpha; break;
    case AdjacencyClass::OneFreeEnd: ++c.beta; break;
    case AdjacencyClass::TrivialSegment: ++c.gamma; break;
    case AdjacencyClass::ZeroFreeEnd: ++c.delta; break;
  }
}

}  // namespace

Classification classify(const Permutation& x, const SegmentSet& segments) {
  require_same_size(x, segments);
  const auto pc = point_classes(segments);
  Classification out;
  for (int i = 0; i + 1 < x.size(); ++i) {
    const auto label = classify_pair(pc.of[x[i]], pc.of[x[i + 1]]);
    out.labels.push_back(label);
    tally(out.counts, label);
  }
  return out;
}

ClassCounts count_classes(std::span<const int> values, std::span<const PointClass> classes) {
  ClassCounts c;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) tally(c, classify_pair(classes[values[i]], classes[values[i + 1]]));
  return c;
}

SegmentSet free_core(const Permutation& x, const SegmentSet& segments) {
  const auto labels = classify(x, segments).labels;
  std::vector<Adjacency> pairs;
  for (int i = 0; i + 1 < x.size(); ++i) {
    if (labels[i] == AdjacencyClass::TwoFreeEnd) pairs.push_back(make_adjacency(x[i], x[i + 1]));
  }
  return decompose(x, AdjacencySet(std::move(pairs)));
}

int deficiency(const Permutation& x, const SegmentSet& segments) {
  return x.size() - 1 - segments.adjacency_count() - free_core(x, segments).adjacency_count();
}

}  // namespace breakgeo
