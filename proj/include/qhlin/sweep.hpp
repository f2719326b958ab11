#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qhlin/linquiver.hpp"

namespace qhlin {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct SweepOptions {
  int max_n = 7;
  std::optional<LinearQuiver> orientation;
  bool parallel = true;
  bool inject_fault = false;
  std::size_t max_witnesses = 20;
};

// Work item result: checks performed and failure witnesses.
struct ItemResult {
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

SuiteResult run_items(const std::string& name, std::size_t count, bool parallel,
                      const std::function<ItemResult(std::size_t)>& item, std::size_t max_witnesses);

SuiteResult oracle_equivalence(const SweepOptions& o);
SuiteResult presentation_dimensions(const SweepOptions& o);
SuiteResult glued_dimensions(const SweepOptions& o);
SuiteResult composition_fidelity(const SweepOptions& o);
SuiteResult formality_suite(const SweepOptions& o);
SuiteResult borel_consistency(const SweepOptions& o);
std::vector<SuiteResult> run_all(const SweepOptions& o);

}  // namespace qhlin
