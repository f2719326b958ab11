#include "qhlin/intervals.hpp"

#include <algorithm>

#include "qhlin/errors.hpp"

namespace qhlin {

std::string Interval::str() const {
  if (empty()) return "0";
  return "M(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Interval span_a(const Segment& s, int x, int y) {
  if (x > y) return Interval::zero();
  const int u = s.from_a(x), v = s.from_a(y);
  return {std::min(u, v), std::max(u, v)};
}

StructureTable::StructureTable(const LabeledTree& tree, const Segment& seg) : tree_(tree), seg_(seg) {
  if (tree.size() != seg.size())
    throw InputError("tree of size " + std::to_string(tree.size()) + " does not fit segment " +
                     std::to_string(seg.lo) + ".." + std::to_string(seg.hi));
  if (tree.first() != seg.lo) throw InputError("tree labels do not match segment range");
  const LabeledTree at =
      seg.direction == SegmentDirection::A ? tree : LabeledTree(tree.tree().mirror(), seg.lo - 1);
  const int n = seg.size();
  s_.resize(n);
  t_.resize(n);
  for (int x = seg.lo; x <= seg.hi; ++x) {
    s_[x - seg.lo] = at.subtree_hi(x);
    t_[x - seg.lo] = at.subtree_lo(x);
  }
}

std::vector<int> StructureTable::projective_orbit(int i) const {
  std::vector<int> out;
  for (int x = seg_.to_a(i); x <= seg_.hi; x = s_[x - seg_.lo] + 1) out.push_back(seg_.from_a(x));
  return out;
}

namespace {

struct AInterval {
  int a, b;
};

AInterval to_a(const Segment& s, const Interval& x) {
  if (!x.within(s))
    throw InputError("interval " + x.str() + " is not inside segment " + std::to_string(s.lo) +
                     ".." + std::to_string(s.hi));
  const int u = s.to_a(x.a), v = s.to_a(x.b);
  return {std::min(u, v), std::max(u, v)};
}

}  // namespace

int hom_dim(const Segment& seg, const Interval& x, const Interval& y) {
  if (x.empty() || y.empty()) return 0;
  auto [i1, j1] = to_a(seg, x);
  auto [i2, j2] = to_a(seg, y);
  return i2 <= i1 && i1 <= j2 && j2 <= j1 ? 1 : 0;
}

int ext1_dim(const Segment& seg, const Interval& x, const Interval& y) {
  if (x.empty() || y.empty()) return 0;
  auto [i1, j1] = to_a(seg, x);
  auto [i2, j2] = to_a(seg, y);
  return i1 + 1 <= i2 && i2 <= j1 + 1 && j1 + 1 <= j2 ? 1 : 0;
}

int std_mult_in_proj(const StructureTable& tbl, int i, int j) {
  for (int v : tbl.projective_orbit(i))
    if (v == j) return 1;
  return 0;
}

PartialOrder essential_order(const StructureTable& tbl) {
  const Segment& s = tbl.segment();
  PartialOrder e(s.lo, s.size());
  for (int j = s.lo; j <= s.hi; ++j) {
    const Interval d = tbl.standard(j);
    for (int i = d.a; i <= d.b; ++i) e.add(i, j);
  }
  for (int i = s.lo; i <= s.hi; ++i)
    for (int j : tbl.projective_orbit(i)) e.add(i, j);
  e.close();
  return e;
}

Filtration has_nabla_filtration(const StructureTable& tbl, const Interval& x) {
  Filtration f;
  if (x.empty()) return f;
  const Segment& s = tbl.segment();
  auto [a, b] = to_a(s, x);
  while (a <= b) {
    const int t = tbl.t_a(s.from_a(b));
    if (t < a) {
      f.ok = false;
      f.blocking = s.from_a(b);
      return f;
    }
    f.factors.push_back(s.from_a(b));
    b = t - 1;
  }
  return f;
}

Filtration has_delta_filtration(const StructureTable& tbl, const Interval& x) {
  Filtration f;
  if (x.empty()) return f;
  const Segment& s = tbl.segment();
  auto [a, b] = to_a(s, x);
  while (a <= b) {
    const int top = s.from_a(a);
    const int far = tbl.s_a(top);
    if (far > b) {
      f.ok = false;
      f.blocking = top;
      return f;
    }
    f.factors.push_back(top);
    a = far + 1;
  }
  return f;
}

namespace {

// Neighbour of v reached along (forward) or against (backward) the arrow on edge k.
int walk(const LinearQuiver& q, const PartialOrder& order, int i, bool forward, int step) {
  int v = i;
  for (;;) {
    const int w = v + step;
    if (w < 1 || w > q.size()) return v;
    const int k = std::min(v, w);
    const bool outgoing = q.arrow_source(k) == v;
    if (outgoing != forward || !order.leq(w, i)) return v;
    v = w;
  }
}

}  // namespace

QuiverStructure structure_from_order(const LinearQuiver& q, const PartialOrder& order) {
  if (order.first() != 1 || order.size() != q.size())
    throw InputError("order carrier does not match quiver");
  QuiverStructure qs;
  for (int i = 1; i <= q.size(); ++i) {
    qs.standard.push_back({walk(q, order, i, true, -1), walk(q, order, i, true, +1)});
    qs.costandard.push_back({walk(q, order, i, false, -1), walk(q, order, i, false, +1)});
  }
  return qs;
}

QuiverStructure assemble_structure(const Deconcatenation& d, const std::vector<StructureTable>& tables) {
  if (tables.size() != d.segments.size()) throw InputError("one table per segment required");
  const int n = d.segments.back().hi;
  QuiverStructure qs;
  qs.standard.assign(n, Interval::zero());
  qs.costandard.assign(n, Interval::zero());
  auto merge = [](Interval& into, const Interval& x) {
    if (into.empty())
      into = x;
    else
      into = {std::min(into.a, x.a), std::max(into.b, x.b)};
  };
  for (const auto& t : tables) {
    const Segment& s = t.segment();
    for (int v = s.lo; v <= s.hi; ++v) {
      merge(qs.standard[v - 1], t.standard(v));
      merge(qs.costandard[v - 1], t.costandard(v));
    }
  }
  return qs;
}

PartialOrder whole_essential_order(const QuiverStructure& qs) {
  const int n = qs.size();
  PartialOrder e(1, n);
  for (int j = 1; j <= n; ++j) {
    for (int i = qs.delta(j).a; i <= qs.delta(j).b; ++i) e.add(i, j);
    for (int i = qs.nabla(j).a; i <= qs.nabla(j).b; ++i) e.add(i, j);
  }
  e.close();
  return e;
}

std::vector<Interval> radical_pieces(const Interval& x, int top) {
  std::vector<Interval> out;
  if (x.empty()) return out;
  if (!x.contains(top)) throw InputError("radical: top outside support");
  if (x.a <= top - 1) out.push_back({x.a, top - 1});
  if (top + 1 <= x.b) out.push_back({top + 1, x.b});
  return out;
}

}  // namespace qhlin
