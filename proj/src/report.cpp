#include "qhlin/report.hpp"

#include <sstream>

namespace qhlin {

using nlohmann::ordered_json;

StructureReport build_report(const Configuration& c) {
  StructureReport r{c, whole_essential_order(c.structure()), {}, {}, {}, {}, std::nullopt, {}};
  std::vector<MonomialPresentation> parts;
  for (const auto& t : c.tables) {
    parts.push_back(ext_algebra(t));
    r.ringel.push_back(ringel_dual(t));
    r.segment_borels.push_back(borel_generators(t, c.quiver));
  }
  r.ext = glue_all(parts, c.decon);
  r.existence = decide_regular_borel(c.quiver, c.decon, c.tables, c.order);
  if (r.existence.verdict) r.borel = whole_borel(c.quiver, c.decon, c.tables, r.existence);
  r.formality = formality_check(r.ext);
  return r;
}

namespace {

ordered_json pair_list(const std::vector<std::pair<int, int>>& ps) {
  ordered_json a = ordered_json::array();
  for (auto [i, j] : ps) a.push_back({i, j});
  return a;
}

ordered_json interval_json(const Interval& x) { return ordered_json::array({x.a, x.b}); }

ordered_json presentation_json(const MonomialPresentation& p) {
  ordered_json j;
  j["vertices"] = p.vertices();
  ordered_json arrows = ordered_json::array();
  for (const auto& a : p.arrows())
    arrows.push_back({{"name", a.name()}, {"src", a.src}, {"tgt", a.tgt}, {"degree", a.degree}});
  j["arrows"] = std::move(arrows);
  j["relations"] = p.relation_names();
  j["dimension"] = basis(p).total();
  return j;
}

}  // namespace

ordered_json to_json(const StructureReport& r) {
  const Configuration& c = r.config;
  const QuiverStructure qs = c.structure();
  ordered_json j;

  ordered_json cuts = ordered_json::array();
  for (const auto& cut : c.decon.cuts) cuts.push_back({{"vertex", cut.vertex}, {"kind", to_string(cut.kind)}});
  j["quiver"] = {{"orientation", c.quiver.orientation()}, {"vertices", c.quiver.size()}, {"cuts", cuts}};

  ordered_json segs = ordered_json::array();
  for (const auto& s : c.decon.segments)
    segs.push_back({{"lo", s.lo}, {"hi", s.hi}, {"direction", to_string(s.direction)}});
  j["segments"] = std::move(segs);
  j["trees"] = c.tree_strings();
  j["order"] = pair_list(c.order.covering_pairs());
  j["essential_order"] = pair_list(r.essential.covering_pairs());

  ordered_json standard, costandard;
  for (int v = 1; v <= c.quiver.size(); ++v) {
    standard[std::to_string(v)] = interval_json(qs.delta(v));
    costandard[std::to_string(v)] = interval_json(qs.nabla(v));
  }
  j["standard"] = std::move(standard);
  j["costandard"] = std::move(costandard);

  ordered_json tilting = ordered_json::array();
  for (const auto& t : c.tables) {
    ordered_json seg;
    for (int v = t.segment().lo; v <= t.segment().hi; ++v) seg[std::to_string(v)] = interval_json(t.tilting(v));
    tilting.push_back(std::move(seg));
  }
  j["tilting"] = std::move(tilting);

  ordered_json ext = presentation_json(r.ext);
  ext["glue_valid"] = r.existence.verdict;
  j["ext_algebra"] = std::move(ext);

  ordered_json ringel = ordered_json::array();
  for (const auto& p : r.ringel) ringel.push_back(presentation_json(p));
  j["ringel_dual"] = std::move(ringel);

  ordered_json borel;
  borel["exists"] = r.existence.verdict;
  ordered_json sinks = ordered_json::array();
  for (const auto& s : r.existence.sinks)
    sinks.push_back({{"vertex", s.vertex}, {"minimal", s.minimal}, {"maximal", s.maximal}});
  borel["sinks"] = std::move(sinks);
  ordered_json wit = ordered_json::array();
  for (const auto& w : r.existence.witnesses) wit.push_back({{"radical_of", w.vertex}, {"ext_from_standard", w.blocking}});
  borel["witnesses"] = std::move(wit);
  if (r.borel) {
    borel["arrows"] = pair_list(r.borel->edges());
    borel["generators"] = r.borel->generators();
  } else {
    borel["arrows"] = nullptr;
    borel["generators"] = nullptr;
  }
  j["borel"] = std::move(borel);

  j["formality"] = {{"passed", r.formality.passed},
                    {"chains_checked", r.formality.chains_checked},
                    {"witnesses", r.formality.witnesses}};
  return j;
}

std::string presentation_dot(const MonomialPresentation& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n";
  for (int v : p.vertices()) os << "  " << v << ";\n";
  for (const auto& a : p.arrows())
    os << "  " << a.src << " -> " << a.tgt << " [label=\"" << a.name() << "\", degree=" << a.degree
       << ", style=" << (a.degree == 0 ? "dashed" : "solid") << "];\n";
  for (const auto& rel : p.relation_names()) os << "  // forbidden: " << rel << "\n";
  os << "}\n";
  return os.str();
}

std::string ringel_dot(const StructureReport& r) {
  std::ostringstream os;
  os << "digraph ringel {\n  rankdir=LR;\n";
  for (int v = 1; v <= r.config.quiver.size(); ++v) os << "  " << v << ";\n";
  for (const auto& p : r.ringel) {
    for (const auto& a : p.arrows())
      os << "  " << a.src << " -> " << a.tgt << " [label=\"" << a.name() << "\", degree=" << a.degree
         << ", style=dashed];\n";
  }
  for (const auto& p : r.ringel)
    for (const auto& rel : p.relation_names()) os << "  // forbidden: " << rel << "\n";
  os << "}\n";
  return os.str();
}

std::string borel_dot(const StructureReport& r) {
  std::ostringstream os;
  os << "digraph borel {\n  rankdir=LR;\n";
  for (int v = 1; v <= r.config.quiver.size(); ++v) os << "  " << v << ";\n";
  if (!r.borel) os << "  // no regular exact Borel subalgebra; per-segment quivers shown\n";
  for (const auto& b : r.segment_borels)
    for (const auto& a : b.arrows)
      os << "  " << a.src << " -> " << a.tgt << " [label=\"" << a.generator.render() << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qhlin
