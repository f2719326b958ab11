#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhlin/intervals.hpp"
#include "qhlin/linquiver.hpp"
#include "qhlin/rep_oracle.hpp"

namespace qhlin {

struct BorelArrow {
  int src = 0;
  int tgt = 0;
  Path generator;
};

struct BorelPresentation {
  std::vector<int> vertices;
  std::vector<BorelArrow> arrows;

  std::vector<std::string> generators() const;
  std::vector<std::pair<int, int>> edges() const;
};

std::vector<std::pair<int, int>> borel_quiver(const StructureTable& tbl);
BorelPresentation borel_generators(const StructureTable& tbl, const LinearQuiver& q);

struct SinkRecord {
  int vertex = 0;
  bool minimal = false;
  bool maximal = false;
};

// Ext1(Delta(blocking), rad Delta(vertex)) is nonzero.
struct RadicalWitness {
  int vertex = 0;
  int blocking = 0;
};

struct ExistenceReport {
  bool verdict = true;
  bool radical_verdict = true;
  std::vector<SinkRecord> sinks;
  std::vector<RadicalWitness> witnesses;
};

std::vector<SinkRecord> sink_records(const Deconcatenation& d, const std::vector<StructureTable>& tables,
                                     const QuiverStructure& qs);
bool structural_verdict(const Deconcatenation& d, const std::vector<StructureTable>& tables,
                        const QuiverStructure& qs);
ExistenceReport decide_regular_borel(const LinearQuiver& q, const Deconcatenation& d,
                                     const std::vector<StructureTable>& tables, const PartialOrder& order);

// Representation of rad Delta(i) for the whole-quiver standard module.
QuiverRep radical_rep(const LinearQuiver& q, const QuiverStructure& qs, int i);

BorelPresentation glue_borels(const BorelPresentation& b1, const BorelPresentation& b2, int v,
                              const ExistenceReport& report);
BorelPresentation whole_borel(const LinearQuiver& q, const Deconcatenation& d,
                              const std::vector<StructureTable>& tables, const ExistenceReport& report);

}  // namespace qhlin
