#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qhlin/intervals.hpp"
#include "qhlin/linquiver.hpp"
#include "qhlin/treeorder.hpp"

namespace qhlin {

// A linear quiver with one tree per segment and everything derived from them.
struct Configuration {
  LinearQuiver quiver;
  Deconcatenation decon;
  std::vector<LabeledTree> trees;
  std::vector<StructureTable> tables;
  PartialOrder order;

  static Configuration make(const LinearQuiver& q, const std::vector<BinaryTree>& shapes);
  static Configuration parse(std::string_view orientation, std::string_view trees);

  std::vector<std::string> tree_strings() const;
  QuiverStructure structure() const { return structure_from_order(quiver, order); }
};

std::vector<std::string> split_trees(std::string_view s);

// Orientations on n vertices with at most max_cuts direction changes, in lexicographic order (L < R).
std::vector<LinearQuiver> orientations(int n, int max_cuts);

// Tree combinations for a fixed quiver, unranked mixed-radix with the first segment most significant.
std::uint64_t combination_count(const Deconcatenation& d);
std::vector<BinaryTree> combination(const Deconcatenation& d, std::uint64_t index);

}  // namespace qhlin
