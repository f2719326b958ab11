#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qhlin/intervals.hpp"

namespace qhlin {

enum class ArrowKind { Epsilon, F, G };

struct Arrow {
  ArrowKind kind = ArrowKind::F;
  int src = 0;
  int tgt = 0;
  int degree = 0;

  std::string name() const;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct ArrowPath {
  int source = 0;
  int target = 0;
  int degree = 0;
  std::vector<std::size_t> arrows;  // indices, first traversed first

  bool trivial() const { return arrows.empty(); }
  friend bool operator==(const ArrowPath&, const ArrowPath&) = default;
};

class MonomialPresentation {
 public:
  MonomialPresentation() = default;
  MonomialPresentation(std::vector<int> vertices, std::vector<Arrow> arrows,
                       const std::vector<std::pair<Arrow, Arrow>>& forbidden);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  // Pairs (outer, inner) of arrow indices: the composite "inner, then outer" is zero.
  const std::set<std::pair<std::size_t, std::size_t>>& forbidden() const { return forbidden_; }
  bool is_forbidden(std::size_t outer, std::size_t inner) const {
    return forbidden_.count({outer, inner}) > 0;
  }
  std::size_t index_of(const Arrow& a) const;
  bool has_vertex(int v) const;

  std::string render(const ArrowPath& p) const;
  std::vector<std::string> relation_names() const;
  ArrowPath arrow_path(std::size_t k) const;
  ArrowPath identity(int v) const { return {v, v, 0, {}}; }

  // Used by the fault-injection harness only.
  void toggle_forbidden(std::size_t outer, std::size_t inner);

 private:
  std::vector<int> vertices_;
  std::vector<Arrow> arrows_;
  std::set<std::pair<std::size_t, std::size_t>> forbidden_;
};

class AlgebraBasis {
 public:
  using Cell = std::tuple<int, int, int>;

  void add(ArrowPath p) { cells_[{p.source, p.target, p.degree}].push_back(std::move(p)); }
  int dim(int i, int j, int d) const;
  int total() const;
  const std::map<Cell, std::vector<ArrowPath>>& cells() const { return cells_; }
  std::vector<ArrowPath> elements(bool include_identities) const;

 private:
  std::map<Cell, std::vector<ArrowPath>> cells_;
};

MonomialPresentation ext_algebra(const StructureTable& tbl);
MonomialPresentation ringel_dual(const StructureTable& tbl);
MonomialPresentation glue(const MonomialPresentation& p1, const MonomialPresentation& p2, int v);
MonomialPresentation glue_all(const std::vector<MonomialPresentation>& parts, const Deconcatenation& d);
AlgebraBasis basis(const MonomialPresentation& p);
std::optional<ArrowPath> multiply(const MonomialPresentation& p, const ArrowPath& outer, const ArrowPath& inner);

struct FormalityReport {
  bool passed = true;
  std::size_t chains_checked = 0;
  std::vector<std::string> witnesses;
};

FormalityReport formality_check(const MonomialPresentation& p);

}  // namespace qhlin
