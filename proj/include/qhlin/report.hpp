#pragma once

#include <string>

#include <json.hpp>

#include "qhlin/borel.hpp"
#include "qhlin/configuration.hpp"
#include "qhlin/presentations.hpp"

namespace qhlin {

struct StructureReport {
  Configuration config;
  PartialOrder essential;
  MonomialPresentation ext;
  std::vector<MonomialPresentation> ringel;
  ExistenceReport existence;
  std::vector<BorelPresentation> segment_borels;
  std::optional<BorelPresentation> borel;
  FormalityReport formality;
};

StructureReport build_report(const Configuration& c);
nlohmann::ordered_json to_json(const StructureReport& r);

std::string presentation_dot(const MonomialPresentation& p, const std::string& name);
std::string borel_dot(const StructureReport& r);
std::string ringel_dot(const StructureReport& r);

}  // namespace qhlin
