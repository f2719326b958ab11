#include "qhlin/borel.hpp"

#include <algorithm>

#include "qhlin/errors.hpp"

namespace qhlin {

std::vector<std::string> BorelPresentation::generators() const {
  std::vector<std::string> out;
  for (int v : vertices) out.push_back("e_" + std::to_string(v));
  for (const auto& a : arrows) out.push_back(a.generator.render());
  return out;
}

std::vector<std::pair<int, int>> BorelPresentation::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& a : arrows) out.emplace_back(a.src, a.tgt);
  return out;
}

std::vector<std::pair<int, int>> borel_quiver(const StructureTable& tbl) {
  std::vector<std::pair<int, int>> out;
  const Segment& s = tbl.segment();
  for (int i = s.lo; i <= s.hi; ++i)
    if (!tbl.standard_is_projective(i)) out.emplace_back(i, s.from_a(tbl.s_a(i) + 1));
  return out;
}

BorelPresentation borel_generators(const StructureTable& tbl, const LinearQuiver& q) {
  BorelPresentation b;
  for (int v = tbl.segment().lo; v <= tbl.segment().hi; ++v) b.vertices.push_back(v);
  for (auto [i, j] : borel_quiver(tbl)) {
    auto p = path_between(q, i, j);
    if (!p) throw InvariantError("Borel arrow " + std::to_string(i) + "->" + std::to_string(j) + " has no ambient path");
    b.arrows.push_back({i, j, *p});
  }
  return b;
}

QuiverRep radical_rep(const LinearQuiver& q, const QuiverStructure& qs, int i) {
  QuiverRep r = zero_rep(q);
  for (const auto& piece : radical_pieces(qs.delta(i), i)) r = direct_sum(r, rep_of_interval(q, piece));
  return r;
}

std::vector<SinkRecord> sink_records(const Deconcatenation& d, const std::vector<StructureTable>& tables,
                                     const QuiverStructure& qs) {
  std::vector<SinkRecord> out;
  for (std::size_t c = 0; c < d.cuts.size(); ++c) {
    const Cut& cut = d.cuts[c];
    if (cut.kind != CutKind::Sink) continue;
    const int v = cut.vertex;
    SinkRecord rec{v, true, true};
    for (std::size_t k : {c, c + 1})
      if (!(tables[k].costandard(v) == Interval{v, v})) rec.minimal = false;
    for (int i = 1; i <= qs.size(); ++i)
      if (i != v && qs.delta(i).contains(v)) rec.maximal = false;
    out.push_back(rec);
  }
  return out;
}

bool structural_verdict(const Deconcatenation& d, const std::vector<StructureTable>& tables,
                        const QuiverStructure& qs) {
  for (const auto& rec : sink_records(d, tables, qs))
    if (!rec.minimal && !rec.maximal) return false;
  return true;
}

ExistenceReport decide_regular_borel(const LinearQuiver& q, const Deconcatenation& d,
                                     const std::vector<StructureTable>& tables, const PartialOrder& order) {
  if (tables.size() != d.segments.size()) throw InputError("one table per segment required");
  const QuiverStructure qs = structure_from_order(q, order);
  const QuiverStructure assembled = assemble_structure(d, tables);
  for (int v = 1; v <= q.size(); ++v)
    if (!(qs.delta(v) == assembled.delta(v)) || !(qs.nabla(v) == assembled.nabla(v)))
      throw InvariantError("order and tables disagree at vertex " + std::to_string(v));

  ExistenceReport rep;
  rep.sinks = sink_records(d, tables, qs);
  for (const auto& rec : rep.sinks) rep.verdict = rep.verdict && (rec.minimal || rec.maximal);

  std::vector<QuiverRep> deltas;
  std::vector<TwoTermResolution> res;
  for (int j = 1; j <= q.size(); ++j) {
    deltas.push_back(rep_of_interval(q, qs.delta(j)));
    res.push_back(std_resolution(q, deltas.back()));
  }
  for (int i = 1; i <= q.size(); ++i) {
    const QuiverRep rad = radical_rep(q, qs, i);
    if (rad.total_dim() == 0) continue;
    for (int j = 1; j <= q.size(); ++j)
      if (ext1_dim_oracle(q, res[j - 1], rad) != 0) rep.witnesses.push_back({i, j});
  }
  rep.radical_verdict = rep.witnesses.empty();
  if (rep.verdict != rep.radical_verdict) {
    std::string why = "structural Borel decision (" + std::string(rep.verdict ? "yes" : "no") +
                      ") disagrees with the radical criterion";
    if (!rep.witnesses.empty())
      why += ": Ext1(Δ(" + std::to_string(rep.witnesses[0].blocking) + "), rad Δ(" +
             std::to_string(rep.witnesses[0].vertex) + ")) != 0";
    throw InvariantError(why);
  }
  return rep;
}

BorelPresentation glue_borels(const BorelPresentation& b1, const BorelPresentation& b2, int v,
                              const ExistenceReport& report) {
  if (!report.verdict) throw InvariantError("no regular exact Borel subalgebra exists for this configuration");
  std::vector<int> shared;
  std::set_intersection(b1.vertices.begin(), b1.vertices.end(), b2.vertices.begin(), b2.vertices.end(),
                        std::back_inserter(shared));
  if (shared != std::vector<int>{v})
    throw InputError("glue_borels: vertex sets must meet exactly in {" + std::to_string(v) + "}");
  BorelPresentation g;
  std::set_union(b1.vertices.begin(), b1.vertices.end(), b2.vertices.begin(), b2.vertices.end(),
                 std::back_inserter(g.vertices));
  g.arrows = b1.arrows;
  g.arrows.insert(g.arrows.end(), b2.arrows.begin(), b2.arrows.end());
  std::sort(g.arrows.begin(), g.arrows.end(),
            [](const BorelArrow& x, const BorelArrow& y) { return std::tie(x.src, x.tgt) < std::tie(y.src, y.tgt); });
  return g;
}

BorelPresentation whole_borel(const LinearQuiver& q, const Deconcatenation& d,
                              const std::vector<StructureTable>& tables, const ExistenceReport& report) {
  BorelPresentation acc = borel_generators(tables.front(), q);
  for (std::size_t k = 1; k < tables.size(); ++k)
    acc = glue_borels(acc, borel_generators(tables[k], q), d.cuts[k - 1].vertex, report);
  if (!report.verdict) throw InvariantError("no regular exact Borel subalgebra exists for this configuration");
  return acc;
}

}  // namespace qhlin
