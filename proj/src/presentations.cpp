#include "qhlin/presentations.hpp"

#include <algorithm>
#include <functional>

#include "qhlin/errors.hpp"

namespace qhlin {

std::string Arrow::name() const {
  const char* sym = kind == ArrowKind::Epsilon ? "ε" : kind == ArrowKind::F ? "f" : "g";
  return std::string(sym) + "_" + std::to_string(src) + "^" + std::to_string(tgt);
}

MonomialPresentation::MonomialPresentation(std::vector<int> vertices, std::vector<Arrow> arrows,
                                           const std::vector<std::pair<Arrow, Arrow>>& forbidden)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) {
    return std::tie(a.src, a.tgt, a.kind) < std::tie(b.src, b.tgt, b.kind);
  });
  for (const auto& a : arrows_)
    if (!has_vertex(a.src) || !has_vertex(a.tgt)) throw InputError("arrow " + a.name() + " leaves the vertex set");
  for (const auto& [outer, inner] : forbidden) {
    if (inner.tgt != outer.src)
      throw InputError("forbidden pair " + outer.name() + "∘" + inner.name() + " is not composable");
    forbidden_.insert({index_of(outer), index_of(inner)});
  }
}

std::size_t MonomialPresentation::index_of(const Arrow& a) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k] == a) return k;
  throw InputError("unknown arrow " + a.name());
}

bool MonomialPresentation::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::string MonomialPresentation::render(const ArrowPath& p) const {
  if (p.trivial()) return "e_" + std::to_string(p.source);
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += "∘";
    s += arrows_[*it].name();
  }
  return s;
}

std::vector<std::string> MonomialPresentation::relation_names() const {
  std::vector<std::string> out;
  for (auto [o, i] : forbidden_) out.push_back(arrows_[o].name() + "∘" + arrows_[i].name());
  return out;
}

ArrowPath MonomialPresentation::arrow_path(std::size_t k) const {
  const Arrow& a = arrows_[k];
  return {a.src, a.tgt, a.degree, {k}};
}

void MonomialPresentation::toggle_forbidden(std::size_t outer, std::size_t inner) {
  if (!forbidden_.erase({outer, inner})) forbidden_.insert({outer, inner});
}

int AlgebraBasis::dim(int i, int j, int d) const {
  auto it = cells_.find({i, j, d});
  return it == cells_.end() ? 0 : static_cast<int>(it->second.size());
}

int AlgebraBasis::total() const {
  int s = 0;
  for (const auto& [cell, paths] : cells_) s += static_cast<int>(paths.size());
  return s;
}

std::vector<ArrowPath> AlgebraBasis::elements(bool include_identities) const {
  std::vector<ArrowPath> out;
  for (const auto& [cell, paths] : cells_)
    for (const auto& p : paths)
      if (include_identities || !p.trivial()) out.push_back(p);
  return out;
}

namespace {

struct Builder {
  std::vector<int> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::pair<Arrow, Arrow>> forbidden;

  MonomialPresentation build() const { return {vertices, arrows, forbidden}; }
};

void all_composable(Builder& b, ArrowKind outer, ArrowKind inner) {
  for (const auto& o : b.arrows)
    for (const auto& i : b.arrows)
      if (o.kind == outer && i.kind == inner && i.tgt == o.src) b.forbidden.emplace_back(o, i);
}

// Children of v as seen in the A-coordinate: left and right swap on B-segments.
std::pair<std::optional<int>, std::optional<int>> children(const StructureTable& tbl, int v) {
  const auto& t = tbl.tree();
  if (tbl.segment().direction == SegmentDirection::A) return {t.left_child(v), t.right_child(v)};
  return {t.right_child(v), t.left_child(v)};
}

std::vector<int> vertex_range(const Segment& s) {
  std::vector<int> v;
  for (int i = s.lo; i <= s.hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

MonomialPresentation ext_algebra(const StructureTable& tbl) {
  Builder b;
  b.vertices = vertex_range(tbl.segment());
  for (int v : b.vertices) {
    auto [l, r] = children(tbl, v);
    if (l) b.arrows.push_back({ArrowKind::Epsilon, *l, v, 1});
    if (r) b.arrows.push_back({ArrowKind::F, *r, v, 0});
  }
  all_composable(b, ArrowKind::Epsilon, ArrowKind::Epsilon);
  all_composable(b, ArrowKind::F, ArrowKind::Epsilon);
  return b.build();
}

MonomialPresentation ringel_dual(const StructureTable& tbl) {
  Builder b;
  b.vertices = vertex_range(tbl.segment());
  for (int v : b.vertices) {
    auto [l, r] = children(tbl, v);
    if (l) b.arrows.push_back({ArrowKind::F, v, *l, 0});
    if (r) b.arrows.push_back({ArrowKind::G, *r, v, 0});
  }
  all_composable(b, ArrowKind::F, ArrowKind::G);
  return b.build();
}

MonomialPresentation glue(const MonomialPresentation& p1, const MonomialPresentation& p2, int v) {
  std::vector<int> shared;
  std::set_intersection(p1.vertices().begin(), p1.vertices().end(), p2.vertices().begin(),
                        p2.vertices().end(), std::back_inserter(shared));
  if (shared != std::vector<int>{v})
    throw InputError("glue: vertex sets must meet exactly in {" + std::to_string(v) + "}");
  Builder b;
  b.vertices = p1.vertices();
  b.vertices.insert(b.vertices.end(), p2.vertices().begin(), p2.vertices().end());
  b.arrows = p1.arrows();
  b.arrows.insert(b.arrows.end(), p2.arrows().begin(), p2.arrows().end());
  for (const auto* p : {&p1, &p2})
    for (auto [o, i] : p->forbidden()) b.forbidden.emplace_back(p->arrows()[o], p->arrows()[i]);
  for (const auto& x : p1.arrows())
    for (const auto& y : p2.arrows()) {
      if (x.tgt == v && y.src == v) b.forbidden.emplace_back(y, x);
      if (y.tgt == v && x.src == v) b.forbidden.emplace_back(x, y);
    }
  return b.build();
}

MonomialPresentation glue_all(const std::vector<MonomialPresentation>& parts, const Deconcatenation& d) {
  if (parts.size() != d.segments.size()) throw InputError("glue_all: one presentation per segment required");
  MonomialPresentation acc = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) acc = glue(acc, parts[k], d.cuts[k - 1].vertex);
  return acc;
}

AlgebraBasis basis(const MonomialPresentation& p) {
  const auto& arrows = p.arrows();
  std::map<int, int> indeg;
  for (int v : p.vertices()) indeg[v] = 0;
  for (const auto& a : arrows) ++indeg[a.tgt];
  std::vector<int> ready;
  for (auto [v, d] : indeg)
    if (d == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows)
      if (a.src == v && --indeg[a.tgt] == 0) ready.push_back(a.tgt);
  }
  if (seen != p.vertices().size()) throw InvariantError("presentation quiver has a cycle");

  AlgebraBasis out;
  std::function<void(ArrowPath&)> extend = [&](ArrowPath& path) {
    out.add(path);
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      if (arrows[k].src != path.target) continue;
      if (!path.trivial() && p.is_forbidden(k, path.arrows.back())) continue;
      ArrowPath next = path;
      next.arrows.push_back(k);
      next.target = arrows[k].tgt;
      next.degree += arrows[k].degree;
      extend(next);
    }
  };
  for (int v : p.vertices()) {
    ArrowPath e = p.identity(v);
    extend(e);
  }
  return out;
}

std::optional<ArrowPath> multiply(const MonomialPresentation& p, const ArrowPath& outer, const ArrowPath& inner) {
  if (inner.target != outer.source) return std::nullopt;
  if (!inner.trivial() && !outer.trivial() && p.is_forbidden(outer.arrows.front(), inner.arrows.back()))
    return std::nullopt;
  ArrowPath r = inner;
  r.arrows.insert(r.arrows.end(), outer.arrows.begin(), outer.arrows.end());
  r.target = outer.target;
  r.degree = inner.degree + outer.degree;
  return r;
}

FormalityReport formality_check(const MonomialPresentation& p) {
  FormalityReport rep;
  const AlgebraBasis b = basis(p);
  const auto elems = b.elements(false);
  std::map<int, std::vector<std::size_t>> from;
  for (std::size_t k = 0; k < elems.size(); ++k) from[elems[k].source].push_back(k);

  int max_degree = 0;
  for (const auto& e : elems) max_degree = std::max(max_degree, e.degree);

  std::vector<std::size_t> chain;
  std::function<void(int, int, int, int)> grow = [&](int at, int zeros, int degree, int src) {
    const int len = static_cast<int>(chain.size());
    const int target_degree = 2 - len + degree;
    if (len >= 3 && (target_degree == 0 || target_degree == 1)) {
      ++rep.chains_checked;
      if (b.dim(src, at, target_degree) != 0) {
        rep.passed = false;
        std::string w;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
          if (!w.empty()) w += " | ";
          w += p.render(elems[*it]);
        }
        rep.witnesses.push_back("m_" + std::to_string(len) + "(" + w + ") may land in cell (" +
                                std::to_string(src) + "," + std::to_string(at) + "," +
                                std::to_string(target_degree) + ")");
      }
    }
    auto it = from.find(at);
    if (it == from.end()) return;
    for (std::size_t k : it->second) {
      const int z = zeros + (elems[k].degree == 0 ? 1 : 0);
      if (max_degree <= 1 && z > 2) continue;
      chain.push_back(k);
      grow(elems[k].target, z, degree + elems[k].degree, src);
      chain.pop_back();
    }
  };
  for (int v : p.vertices()) grow(v, 0, 0, v);
  return rep;
}

}  // namespace qhlin
