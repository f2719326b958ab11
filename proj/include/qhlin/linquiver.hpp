#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qhlin {

enum class Direction { Right, Left };

// Vertices 1..n on a line; edge k joins k and k+1 and is written alpha_k.
class LinearQuiver {
 public:
  explicit LinearQuiver(std::vector<Direction> edges);
  static LinearQuiver parse(std::string_view orientation);
  static LinearQuiver single_vertex() { return LinearQuiver({}); }

  int size() const { return static_cast<int>(edges_.size()) + 1; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  Direction edge(int k) const;
  int arrow_source(int k) const;
  int arrow_target(int k) const;
  bool is_sink(int v) const;
  bool is_source(int v) const;
  std::string orientation() const;
  void check_vertex(int v) const;

  friend bool operator==(const LinearQuiver&, const LinearQuiver&) = default;

 private:
  std::vector<Direction> edges_;
};

enum class SegmentDirection { A, B };

struct Segment {
  int lo = 1;
  int hi = 1;
  SegmentDirection direction = SegmentDirection::A;

  int size() const { return hi - lo + 1; }
  bool contains(int v) const { return lo <= v && v <= hi; }
  int reflect(int v) const { return lo + hi - v; }
  // Coordinate in which arrows run from smaller to larger labels.
  int to_a(int v) const { return direction == SegmentDirection::A ? v : reflect(v); }
  int from_a(int v) const { return to_a(v); }
  int head() const { return direction == SegmentDirection::A ? hi : lo; }
  int tail() const { return direction == SegmentDirection::A ? lo : hi; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

enum class CutKind { Sink, Source };

struct Cut {
  int vertex = 0;
  CutKind kind = CutKind::Sink;
  friend bool operator==(const Cut&, const Cut&) = default;
};

struct Deconcatenation {
  std::vector<Segment> segments;
  std::vector<Cut> cuts;

  const Segment& segment_of(int v) const;
};

Deconcatenation deconcatenate(const LinearQuiver& q);

struct Path {
  Segment segment;
  int from = 1;
  int to = 1;

  int length() const { return from < to ? to - from : from - to; }
  std::vector<int> edges() const;
  std::string render() const;
};

std::optional<Path> path_between(const LinearQuiver& q, int i, int j);

std::string to_string(SegmentDirection d);
std::string to_string(CutKind k);

}  // namespace qhlin
