#include "qhlin/linquiver.hpp"

#include "qhlin/errors.hpp"

namespace qhlin {

LinearQuiver::LinearQuiver(std::vector<Direction> edges) : edges_(std::move(edges)) {}

LinearQuiver LinearQuiver::parse(std::string_view s) {
  std::vector<Direction> e;
  e.reserve(s.size());
  for (char c : s) {
    if (c == 'R')
      e.push_back(Direction::Right);
    else if (c == 'L')
      e.push_back(Direction::Left);
    else
      throw InputError("orientation: unexpected character '" + std::string(1, c) + "'");
  }
  return LinearQuiver(std::move(e));
}

void LinearQuiver::check_vertex(int v) const {
  if (v < 1 || v > size())
    throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(size()));
}

Direction LinearQuiver::edge(int k) const {
  if (k < 1 || k > edge_count()) throw InputError("edge index out of range");
  return edges_[k - 1];
}

int LinearQuiver::arrow_source(int k) const { return edge(k) == Direction::Right ? k : k + 1; }
int LinearQuiver::arrow_target(int k) const { return edge(k) == Direction::Right ? k + 1 : k; }

bool LinearQuiver::is_sink(int v) const {
  check_vertex(v);
  for (int k = 1; k <= edge_count(); ++k)
    if (arrow_source(k) == v) return false;
  return true;
}

bool LinearQuiver::is_source(int v) const {
  check_vertex(v);
  for (int k = 1; k <= edge_count(); ++k)
    if (arrow_target(k) == v) return false;
  return true;
}

std::string LinearQuiver::orientation() const {
  std::string s;
  for (auto d : edges_) s += d == Direction::Right ? 'R' : 'L';
  return s;
}

const Segment& Deconcatenation::segment_of(int v) const {
  for (const auto& s : segments)
    if (s.contains(v)) return s;
  throw InputError("vertex " + std::to_string(v) + " not covered by any segment");
}

Deconcatenation deconcatenate(const LinearQuiver& q) {
  Deconcatenation d;
  const int m = q.edge_count();
  if (m == 0) {
    d.segments.push_back({1, 1, SegmentDirection::A});
    return d;
  }
  int lo = 1;
  for (int k = 1; k <= m; ++k) {
    if (k < m && q.edge(k + 1) == q.edge(k)) continue;
    auto dir = q.edge(k) == Direction::Right ? SegmentDirection::A : SegmentDirection::B;
    d.segments.push_back({lo, k + 1, dir});
    if (k < m)
      d.cuts.push_back({k + 1, q.edge(k) == Direction::Right ? CutKind::Sink : CutKind::Source});
    lo = k + 1;
  }
  return d;
}

std::vector<int> Path::edges() const {
  std::vector<int> e;
  if (from < to)
    for (int k = from; k < to; ++k) e.push_back(k);
  else
    for (int k = from - 1; k >= to; --k) e.push_back(k);
  return e;
}

std::string Path::render() const {
  if (from == to) return "e_" + std::to_string(from);
  auto e = edges();
  std::string s;
  for (auto it = e.rbegin(); it != e.rend(); ++it) s += "α_" + std::to_string(*it);
  return s;
}

std::optional<Path> path_between(const LinearQuiver& q, int i, int j) {
  q.check_vertex(i);
  q.check_vertex(j);
  const auto d = deconcatenate(q);
  if (i == j) return Path{d.segment_of(i), i, j};
  const Direction want = i < j ? Direction::Right : Direction::Left;
  const int a = std::min(i, j), b = std::max(i, j);
  for (int k = a; k < b; ++k)
    if (q.edge(k) != want) return std::nullopt;
  for (const auto& s : d.segments)
    if (s.contains(a) && s.contains(b)) return Path{s, i, j};
  return std::nullopt;
}

std::string to_string(SegmentDirection d) { return d == SegmentDirection::A ? "A" : "B"; }
std::string to_string(CutKind k) { return k == CutKind::Sink ? "sink" : "source"; }

}  // namespace qhlin
