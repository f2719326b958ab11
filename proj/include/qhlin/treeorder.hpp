#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qhlin/linquiver.hpp"

namespace qhlin {

// Nodes are identified by in-order position 0..size-1.
class BinaryTree {
 public:
  BinaryTree() = default;
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);
  static BinaryTree parse(std::string_view s);

  int size() const { return static_cast<int>(left_.size()); }
  bool empty() const { return left_.empty(); }
  int root() const { return root_; }
  int left(int pos) const { return left_[pos]; }
  int right(int pos) const { return right_[pos]; }
  BinaryTree left_subtree() const;
  BinaryTree right_subtree() const;
  BinaryTree mirror() const;
  std::string str() const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

 private:
  BinaryTree subtree(int pos) const;
  void write(std::string& out, int pos) const;

  int root_ = -1;
  std::vector<int> left_;
  std::vector<int> right_;
};

std::uint64_t catalan(int n);
BinaryTree unrank_tree(int n, std::uint64_t index);
std::vector<BinaryTree> enumerate_trees(int n);

class LabeledTree {
 public:
  LabeledTree(BinaryTree tree, int offset);

  const BinaryTree& tree() const { return tree_; }
  int first() const { return offset_ + 1; }
  int last() const { return offset_ + tree_.size(); }
  int size() const { return tree_.size(); }
  int root() const { return label(tree_.root()); }
  std::optional<int> left_child(int v) const;
  std::optional<int> right_child(int v) const;
  std::optional<int> parent(int v) const;
  int subtree_lo(int v) const { return lo_[pos(v)] + offset_ + 1; }
  int subtree_hi(int v) const { return hi_[pos(v)] + offset_ + 1; }
  bool in_subtree(int i, int v) const { return subtree_lo(v) <= i && i <= subtree_hi(v); }

 private:
  int label(int p) const { return p + offset_ + 1; }
  int pos(int v) const;

  BinaryTree tree_;
  int offset_;
  std::vector<int> lo_, hi_, parent_;
};

// Dense reflexive relation on the labels first..first+size-1.
class PartialOrder {
 public:
  PartialOrder() = default;
  PartialOrder(int first, int size);

  int first() const { return first_; }
  int last() const { return first_ + size_ - 1; }
  int size() const { return size_; }
  bool contains(int v) const { return first_ <= v && v <= last(); }

  bool leq(int i, int j) const { return rel_[idx(i, j)] != 0; }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  void add(int i, int j) { rel_[idx(i, j)] = 1; }
  void close();

  bool is_reflexive() const;
  bool is_antisymmetric() const;
  bool is_transitive() const;
  std::optional<std::vector<int>> find_cycle() const;

  std::vector<std::pair<int, int>> strict_pairs() const;
  std::vector<std::pair<int, int>> covering_pairs() const;
  bool is_minimal(int v) const;
  bool is_maximal(int v) const;
  PartialOrder restrict(int lo, int hi) const;

  friend bool operator==(const PartialOrder&, const PartialOrder&) = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i - first_) * size_ + (j - first_);
  }

  int first_ = 1;
  int size_ = 0;
  std::vector<unsigned char> rel_;
};

PartialOrder tree_order(const LabeledTree& t);
PartialOrder combine_orders(const std::vector<PartialOrder>& orders, const Deconcatenation& decon);
std::string render_cycle(const std::vector<int>& cycle);

}  // namespace qhlin
