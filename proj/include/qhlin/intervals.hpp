#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qhlin/linquiver.hpp"
#include "qhlin/treeorder.hpp"

namespace qhlin {

// Support [a,b] of an interval module M(a,b); a > b is the zero module.
struct Interval {
  int a = 1;
  int b = 0;

  static Interval zero() { return {1, 0}; }
  bool empty() const { return a > b; }
  int size() const { return empty() ? 0 : b - a + 1; }
  bool contains(int v) const { return a <= v && v <= b; }
  bool within(const Segment& s) const { return empty() || (s.lo <= a && b <= s.hi); }
  std::string str() const;

  friend bool operator==(const Interval& x, const Interval& y) {
    return (x.empty() && y.empty()) || (x.a == y.a && x.b == y.b);
  }
};

inline std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << x.str(); }

Interval span_a(const Segment& s, int x, int y);

class StructureTable {
 public:
  StructureTable(const LabeledTree& tree, const Segment& seg);

  const Segment& segment() const { return seg_; }
  const LabeledTree& tree() const { return tree_; }

  // Far ends s_i and t_i, as global labels.
  int far_standard(int i) const { return seg_.from_a(s_a(i)); }
  int far_costandard(int i) const { return seg_.from_a(t_a(i)); }

  Interval standard(int i) const { return span_a(seg_, seg_.to_a(i), s_a(i)); }
  Interval costandard(int i) const { return span_a(seg_, t_a(i), seg_.to_a(i)); }
  Interval tilting(int i) const { return span_a(seg_, t_a(i), s_a(i)); }
  Interval projective(int i) const { return span_a(seg_, seg_.to_a(i), seg_.hi); }
  Interval injective(int i) const { return span_a(seg_, seg_.lo, seg_.to_a(i)); }
  bool standard_is_projective(int i) const { return s_a(i) == seg_.hi; }

  // Labels along i, s_i+1, s_{s_i+1}+1, ... in the A-coordinate.
  std::vector<int> projective_orbit(int i) const;

  // In A-coordinates: s for the standard, t for the costandard.
  int s_a(int i) const { return s_[seg_.to_a(i) - seg_.lo]; }
  int t_a(int i) const { return t_[seg_.to_a(i) - seg_.lo]; }

 private:
  LabeledTree tree_;
  Segment seg_;
  std::vector<int> s_, t_;
};

int hom_dim(const Segment& seg, const Interval& x, const Interval& y);
int ext1_dim(const Segment& seg, const Interval& x, const Interval& y);
int std_mult_in_proj(const StructureTable& tbl, int i, int j);
PartialOrder essential_order(const StructureTable& tbl);

struct Filtration {
  bool ok = true;
  std::vector<int> factors;  // labels, bottom first for nabla, top first for delta
  int blocking = 0;
};

Filtration has_nabla_filtration(const StructureTable& tbl, const Interval& x);
Filtration has_delta_filtration(const StructureTable& tbl, const Interval& x);

// Whole-quiver standard/costandard supports from an order on 1..n.
struct QuiverStructure {
  std::vector<Interval> standard;
  std::vector<Interval> costandard;

  const Interval& delta(int v) const { return standard[v - 1]; }
  const Interval& nabla(int v) const { return costandard[v - 1]; }
  int size() const { return static_cast<int>(standard.size()); }
};

QuiverStructure structure_from_order(const LinearQuiver& q, const PartialOrder& order);
QuiverStructure assemble_structure(const Deconcatenation& d, const std::vector<StructureTable>& tables);
PartialOrder whole_essential_order(const QuiverStructure& qs);

// rad of a module M(a,b) with top at v: the pieces of [a,b] minus v.
std::vector<Interval> radical_pieces(const Interval& x, int top);

}  // namespace qhlin
