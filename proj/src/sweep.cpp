#include "qhlin/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

#include "qhlin/borel.hpp"
#include "qhlin/configuration.hpp"
#include "qhlin/errors.hpp"
#include "qhlin/presentations.hpp"
#include "qhlin/rep_oracle.hpp"

namespace qhlin {

SuiteResult run_items(const std::string& name, std::size_t count, bool parallel,
                      const std::function<ItemResult(std::size_t)>& item, std::size_t max_witnesses) {
  std::vector<ItemResult> results(count);
  auto guarded = [&](std::size_t k) {
    try {
      results[k] = item(k);
    } catch (const std::exception& e) {
      results[k].failures.push_back(std::string("exception: ") + e.what());
    }
  };
  if (parallel) {
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < n; ++k) guarded(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < count; ++k) guarded(k);
  }
  SuiteResult s{name, 0, {}};
  std::size_t failed = 0;
  for (auto& r : results) {
    s.checks += r.checks;
    for (auto& f : r.failures) {
      if (s.failures.size() < max_witnesses) s.failures.push_back(std::move(f));
      ++failed;
    }
  }
  if (failed > s.failures.size())
    s.failures.push_back("... " + std::to_string(failed - s.failures.size()) + " more failures");
  return s;
}

namespace {

std::vector<LinearQuiver> quivers(const SweepOptions& o, int max_cuts) {
  if (o.orientation) {
    const int cuts = static_cast<int>(deconcatenate(*o.orientation).cuts.size());
    if (cuts <= max_cuts) return {*o.orientation};
    return {};
  }
  std::vector<LinearQuiver> out;
  for (int n = 1; n <= o.max_n; ++n)
    for (auto& q : orientations(n, max_cuts)) out.push_back(std::move(q));
  return out;
}

struct ConfigItem {
  std::size_t quiver;
  std::uint64_t combo;
};

std::vector<ConfigItem> config_items(const std::vector<LinearQuiver>& qs, int min_cuts) {
  std::vector<ConfigItem> out;
  for (std::size_t k = 0; k < qs.size(); ++k) {
    const auto d = deconcatenate(qs[k]);
    if (static_cast<int>(d.cuts.size()) < min_cuts) continue;
    const auto c = combination_count(d);
    for (std::uint64_t i = 0; i < c; ++i) out.push_back({k, i});
  }
  return out;
}

// Single-segment trees of each size and both directions.
struct TreeItem {
  SegmentDirection direction;
  int n;
  std::uint64_t index;
};

std::vector<TreeItem> tree_items(int max_n, const std::optional<LinearQuiver>& only) {
  std::vector<TreeItem> out;
  if (only) {
    const auto d = deconcatenate(*only);
    if (!d.cuts.empty()) return out;
    for (std::uint64_t i = 0; i < catalan(only->size()); ++i)
      out.push_back({d.segments[0].direction, only->size(), i});
    return out;
  }
  for (auto dir : {SegmentDirection::A, SegmentDirection::B})
    for (int n = 1; n <= max_n; ++n)
      for (std::uint64_t i = 0; i < catalan(n); ++i) out.push_back({dir, n, i});
  return out;
}

LinearQuiver uniform(SegmentDirection dir, int n) {
  return LinearQuiver(std::vector<Direction>(n - 1, dir == SegmentDirection::A ? Direction::Right : Direction::Left));
}

std::string label(const Configuration& c) {
  std::string s = "[" + c.quiver.orientation() + "]";
  for (const auto& t : c.tree_strings()) s += " " + t;
  return s;
}

PartialOrder embedded(const PartialOrder& seg, int n) {
  PartialOrder p(1, n);
  for (int i = seg.first(); i <= seg.last(); ++i)
    for (int j = seg.first(); j <= seg.last(); ++j)
      if (seg.leq(i, j)) p.add(i, j);
  return p;
}

template <class T>
void expect_eq(ItemResult& r, const T& got, const T& want, const std::string& what,
               const char* want_name = "closed form", const char* got_name = "oracle") {
  ++r.checks;
  if (!(got == want)) {
    std::ostringstream os;
    os << what << ": " << want_name << " " << want << ", " << got_name << " " << got;
    r.failures.push_back(os.str());
  }
}

std::string pname(int i, int j, int d) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(d) + ")";
}

ItemResult oracle_item(const LinearQuiver& q) {
  ItemResult r;
  const int n = q.size();
  const auto d = deconcatenate(q);
  for (const auto& seg : d.segments) {
    std::vector<Interval> ivs;
    for (int a = seg.lo; a <= seg.hi; ++a)
      for (int b = a; b <= seg.hi; ++b) ivs.push_back({a, b});
    std::vector<QuiverRep> reps;
    std::vector<TwoTermResolution> res;
    for (const auto& x : ivs) {
      reps.push_back(rep_of_interval(q, x));
      res.push_back(std_resolution(q, reps.back()));
    }
    for (std::size_t x = 0; x < ivs.size(); ++x)
      for (std::size_t y = 0; y < ivs.size(); ++y) {
        const std::string at = "[" + q.orientation() + "] " + ivs[x].str() + "," + ivs[y].str();
        expect_eq(r, hom_dim_oracle(q, reps[x], reps[y]), hom_dim(seg, ivs[x], ivs[y]), "Hom " + at);
        expect_eq(r, ext1_dim_oracle(q, res[x], reps[y]), ext1_dim(seg, ivs[x], ivs[y]), "Ext1 " + at);
      }

    for (const auto& shape : enumerate_trees(seg.size())) {
      const LabeledTree t(shape, seg.lo - 1);
      const StructureTable tbl(t, seg);
      const PartialOrder order = embedded(tree_order(t), n);
      const std::string at = " [" + q.orientation() + "] " + shape.str();
      PartialOrder recip(seg.lo, seg.size());
      std::vector<Interval> deltas(n + 1), nablas(n + 1);
      for (int i = seg.lo; i <= seg.hi; ++i) {
        deltas[i] = support_of(standard_oracle(q, order, i));
        nablas[i] = support_of(costandard_oracle(q, order, i));
        expect_eq(r, deltas[i], tbl.standard(i), "Δ(" + std::to_string(i) + ")" + at);
        expect_eq(r, nablas[i], tbl.costandard(i), "∇(" + std::to_string(i) + ")" + at);
        for (int v = deltas[i].a; v <= deltas[i].b; ++v) recip.add(v, i);
        for (int v = nablas[i].a; v <= nablas[i].b; ++v) recip.add(v, i);

        ++r.checks;
        if (!has_delta_filtration(tbl, tbl.tilting(i)).ok || !has_nabla_filtration(tbl, tbl.tilting(i)).ok)
          r.failures.push_back("T(" + std::to_string(i) + ") lacks a Δ- or ∇-filtration" + at);
        for (const auto& piece : radical_pieces(tbl.standard(i), i)) {
          ++r.checks;
          if (!has_nabla_filtration(tbl, piece).ok)
            r.failures.push_back("rad Δ(" + std::to_string(i) + ") has no ∇-filtration" + at);
        }
      }
      for (int i = seg.lo; i <= seg.hi; ++i)
        for (int j = seg.lo; j <= seg.hi; ++j) {
          expect_eq(r, nablas[j].contains(i) ? 1 : 0, std_mult_in_proj(tbl, i, j),
                    "(P(" + std::to_string(i) + "):Δ(" + std::to_string(j) + "))" + at);
          const bool arrow = !tbl.standard_is_projective(i) && j == seg.from_a(tbl.s_a(i) + 1);
          expect_eq(r, arrow ? 1 : 0, ext1_dim(seg, tbl.standard(i), tbl.standard(j)),
                    "Ext1(Δ" + std::to_string(i) + ",Δ" + std::to_string(j) + ") arrow rule" + at);
        }
      recip.close();
      ++r.checks;
      if (!(recip == essential_order(tbl))) r.failures.push_back("essential order mismatch" + at);
    }
  }
  return r;
}

// Ext-presentation cells against closed forms and the oracle for a single configuration.
ItemResult cell_item(const Configuration& c, const MonomialPresentation& p, bool with_closed_form) {
  ItemResult r;
  const AlgebraBasis b = basis(p);
  const auto qs = c.structure();
  const int n = c.quiver.size();
  std::vector<QuiverRep> reps;
  std::vector<TwoTermResolution> res;
  for (int i = 1; i <= n; ++i) {
    reps.push_back(rep_of_interval(c.quiver, qs.delta(i)));
    res.push_back(std_resolution(c.quiver, reps.back()));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int h = hom_dim_oracle(c.quiver, reps[i - 1], reps[j - 1]);
      const int e = ext1_dim_oracle(c.quiver, res[i - 1], reps[j - 1]);
      const std::string at = " " + label(c);
      expect_eq(r, h, b.dim(i, j, 0), "cell " + pname(i, j, 0) + at, "presentation");
      expect_eq(r, e, b.dim(i, j, 1), "cell " + pname(i, j, 1) + at, "presentation");
      if (with_closed_form) {
        const Segment& s = c.decon.segments[0];
        expect_eq(r, hom_dim(s, qs.delta(i), qs.delta(j)), b.dim(i, j, 0), "cell " + pname(i, j, 0) + at,
                  "presentation", "closed form");
        expect_eq(r, ext1_dim(s, qs.delta(i), qs.delta(j)), b.dim(i, j, 1), "cell " + pname(i, j, 1) + at,
                  "presentation", "closed form");
      }
    }
  return r;
}

void inject(MonomialPresentation& p) {
  const auto& a = p.arrows();
  for (std::size_t o = 0; o < a.size(); ++o)
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].tgt == a[o].src) {
        p.toggle_forbidden(o, i);
        return;
      }
}

}  // namespace

SuiteResult oracle_equivalence(const SweepOptions& o) {
  const auto qs = quivers(o, o.max_n);
  return run_items("oracle equivalence", qs.size(), o.parallel,
                   [&](std::size_t k) { return oracle_item(qs[k]); }, o.max_witnesses);
}

SuiteResult presentation_dimensions(const SweepOptions& o) {
  const auto items = tree_items(o.max_n, o.orientation);
  return run_items("presentation dimensions", items.size(), o.parallel, [&](std::size_t k) {
    const auto& it = items[k];
    const Configuration c = Configuration::make(uniform(it.direction, it.n), {unrank_tree(it.n, it.index)});
    MonomialPresentation p = ext_algebra(c.tables[0]);
    if (o.inject_fault) inject(p);
    return cell_item(c, p, true);
  }, o.max_witnesses);
}

SuiteResult glued_dimensions(const SweepOptions& o) {
  const auto qs = quivers(o, 2);
  const auto items = config_items(qs, 1);
  return run_items("glued dimensions", items.size(), o.parallel, [&](std::size_t k) {
    const auto& q = qs[items[k].quiver];
    const Configuration c = Configuration::make(q, combination(deconcatenate(q), items[k].combo));
    if (!structural_verdict(c.decon, c.tables, c.structure())) return ItemResult{};
    std::vector<MonomialPresentation> parts;
    for (const auto& t : c.tables) parts.push_back(ext_algebra(t));
    ItemResult r = cell_item(c, glue_all(parts, c.decon), false);
    const AlgebraBasis b = basis(glue_all(parts, c.decon));
    int expect = 1 - static_cast<int>(parts.size());
    for (const auto& p : parts) expect += basis(p).total();
    expect_eq(r, b.total(), expect, "glued total dimension " + label(c), "sum of parts", "glued");
    return r;
  }, o.max_witnesses);
}

SuiteResult composition_fidelity(const SweepOptions& o) {
  const auto items = tree_items(std::min(o.max_n, 6), o.orientation);
  return run_items("composition fidelity", items.size(), o.parallel, [&](std::size_t k) {
    ItemResult r;
    const auto& it = items[k];
    const Configuration c = Configuration::make(uniform(it.direction, it.n), {unrank_tree(it.n, it.index)});
    const StructureTable& tbl = c.tables[0];
    MonomialPresentation p = ext_algebra(tbl);
    if (o.inject_fault) inject(p);
    const AlgebraBasis b = basis(p);
    const auto qs = c.structure();
    YonedaContext ctx(c.quiver);
    std::vector<QuiverRep> reps;
    for (int i = 1; i <= it.n; ++i) reps.push_back(rep_of_interval(c.quiver, qs.delta(i)));
    auto oracle_element = [&](const ArrowPath& x) {
      auto els = ctx.basis(reps[x.source - 1], reps[x.target - 1], x.degree);
      if (els.size() != 1) throw InvariantError("oracle cell " + pname(x.source, x.target, x.degree) + " is not one-dimensional");
      return els[0];
    };
    const auto elems = b.elements(true);
    for (const auto& x : elems)
      for (const auto& y : elems) {
        if (x.target != y.source || x.degree + y.degree > 1) continue;
        const bool pres = multiply(p, y, x).has_value();
        const auto& X = reps[x.source - 1];
        const auto& Y = reps[x.target - 1];
        const auto& Z = reps[y.target - 1];
        const auto prod = ctx.compose(X, Y, Z, oracle_element(y), oracle_element(x));
        const bool orc = !ctx.is_zero(X, Z, prod);
        ++r.checks;
        if (pres != orc)
          r.failures.push_back("product " + p.render(y) + " · " + p.render(x) + ": presentation " +
                               (pres ? "nonzero" : "zero") + ", Yoneda " + (orc ? "nonzero" : "zero") + " " + label(c));
      }
    // Left-subtree composites are nonzero, right-subtree composites vanish.
    const auto& t = tbl.tree();
    const bool a_side = tbl.segment().direction == SegmentDirection::A;
    for (int v = t.first(); v <= t.last(); ++v) {
      auto inner_child = a_side ? t.left_child(v) : t.right_child(v);
      auto outer_child = a_side ? t.right_child(v) : t.left_child(v);
      if (inner_child) {
        auto w = a_side ? t.right_child(*inner_child) : t.left_child(*inner_child);
        if (w) {
          const auto& X = reps[*w - 1];
          const auto& Y = reps[*inner_child - 1];
          const auto& Z = reps[v - 1];
          auto hom = ctx.basis(X, Y, 0).at(0);
          auto ext = ctx.basis(Y, Z, 1).at(0);
          ++r.checks;
          if (ctx.is_zero(X, Z, ctx.compose(X, Y, Z, ext, hom)))
            r.failures.push_back("left-subtree composite vanishes at v=" + std::to_string(v) + " " + label(c));
        }
      }
      if (outer_child) {
        auto w = a_side ? t.left_child(*outer_child) : t.right_child(*outer_child);
        if (w) {
          const auto& X = reps[*w - 1];
          const auto& Y = reps[*outer_child - 1];
          const auto& Z = reps[v - 1];
          auto ext = ctx.basis(X, Y, 1).at(0);
          auto hom = ctx.basis(Y, Z, 0).at(0);
          ++r.checks;
          if (!ctx.is_zero(X, Z, ctx.compose(X, Y, Z, hom, ext)))
            r.failures.push_back("right-subtree composite is nonzero at v=" + std::to_string(v) + " " + label(c));
        }
      }
    }
    return r;
  }, o.max_witnesses);
}

SuiteResult formality_suite(const SweepOptions& o) {
  const auto trees = tree_items(o.max_n, o.orientation);
  const auto qs = quivers(o, 2);
  const auto glued = config_items(qs, 1);
  return run_items("formality", trees.size() + glued.size(), o.parallel, [&](std::size_t k) {
    ItemResult r;
    Configuration c = k < trees.size()
                          ? Configuration::make(uniform(trees[k].direction, trees[k].n),
                                                {unrank_tree(trees[k].n, trees[k].index)})
                          : [&] {
                              const auto& it = glued[k - trees.size()];
                              const auto& q = qs[it.quiver];
                              return Configuration::make(q, combination(deconcatenate(q), it.combo));
                            }();
    std::vector<MonomialPresentation> parts;
    for (const auto& t : c.tables) parts.push_back(ext_algebra(t));
    MonomialPresentation p = glue_all(parts, c.decon);
    if (o.inject_fault) inject(p);
    const auto f = formality_check(p);
    r.checks = 1 + f.chains_checked;
    for (const auto& w : f.witnesses) r.failures.push_back(w + " " + label(c));
    return r;
  }, o.max_witnesses);
}

SuiteResult borel_consistency(const SweepOptions& o) {
  const auto qs = quivers(o, 2);
  const auto items = config_items(qs, 0);
  return run_items("Borel consistency", items.size(), o.parallel, [&](std::size_t k) {
    ItemResult r;
    const auto& q = qs[items[k].quiver];
    const Configuration c = Configuration::make(q, combination(deconcatenate(q), items[k].combo));
    const ExistenceReport rep = decide_regular_borel(c.quiver, c.decon, c.tables, c.order);
    ++r.checks;
    if (c.decon.cuts.empty()) {
      ++r.checks;
      if (!rep.verdict) r.failures.push_back("uniform quiver without Borel " + label(c));
      const auto& tbl = c.tables[0];
      const Segment& s = tbl.segment();
      std::vector<std::pair<int, int>> cells;
      for (int i = s.lo; i <= s.hi; ++i)
        for (int j = s.lo; j <= s.hi; ++j)
          if (ext1_dim(s, tbl.standard(i), tbl.standard(j)) == 1) cells.emplace_back(i, j);
      auto arrows = borel_quiver(tbl);
      std::sort(arrows.begin(), arrows.end());
      ++r.checks;
      if (arrows != cells) r.failures.push_back("Borel arrows differ from Ext1 cells " + label(c));
    }
    return r;
  }, o.max_witnesses);
}

std::vector<SuiteResult> run_all(const SweepOptions& o) {
  return {oracle_equivalence(o), presentation_dimensions(o), glued_dimensions(o),
          composition_fidelity(o), formality_suite(o), borel_consistency(o)};
}

}  // namespace qhlin
