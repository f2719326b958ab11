#include "qhlin/treeorder.hpp"

#include <array>
#include <functional>

#include "qhlin/errors.hpp"

namespace qhlin {

BinaryTree BinaryTree::node(const BinaryTree& l, const BinaryTree& r) {
  BinaryTree t;
  const int nl = l.size(), nr = r.size();
  t.left_.assign(nl + nr + 1, -1);
  t.right_.assign(nl + nr + 1, -1);
  for (int p = 0; p < nl; ++p) {
    t.left_[p] = l.left_[p];
    t.right_[p] = l.right_[p];
  }
  for (int p = 0; p < nr; ++p) {
    t.left_[nl + 1 + p] = r.left_[p] < 0 ? -1 : r.left_[p] + nl + 1;
    t.right_[nl + 1 + p] = r.right_[p] < 0 ? -1 : r.right_[p] + nl + 1;
  }
  t.root_ = nl;
  t.left_[nl] = l.root_;
  t.right_[nl] = nr == 0 ? -1 : r.root_ + nl + 1;
  return t;
}

BinaryTree BinaryTree::parse(std::string_view s) {
  std::size_t at = 0;
  std::function<BinaryTree()> parse_node = [&]() -> BinaryTree {
    if (at >= s.size()) throw InputError("tree: unexpected end of input");
    if (s[at] == '.') {
      ++at;
      return {};
    }
    if (s[at] != '(')
      throw InputError("tree: unexpected character '" + std::string(1, s[at]) + "'");
    ++at;
    BinaryTree l = parse_node();
    BinaryTree r = parse_node();
    if (at >= s.size() || s[at] != ')') throw InputError("tree: expected ')'");
    ++at;
    return node(l, r);
  };
  BinaryTree t = parse_node();
  if (at != s.size()) throw InputError("tree: trailing characters");
  return t;
}

BinaryTree BinaryTree::subtree(int pos) const {
  if (pos < 0) return {};
  return node(subtree(left_[pos]), subtree(right_[pos]));
}

BinaryTree BinaryTree::left_subtree() const { return empty() ? BinaryTree{} : subtree(left_[root_]); }
BinaryTree BinaryTree::right_subtree() const { return empty() ? BinaryTree{} : subtree(right_[root_]); }

BinaryTree BinaryTree::mirror() const {
  if (empty()) return {};
  return node(right_subtree().mirror(), left_subtree().mirror());
}

void BinaryTree::write(std::string& out, int pos) const {
  if (pos < 0) {
    out += '.';
    return;
  }
  out += '(';
  write(out, left_[pos]);
  write(out, right_[pos]);
  out += ')';
}

std::string BinaryTree::str() const {
  std::string s;
  write(s, root_);
  return s;
}

std::uint64_t catalan(int n) {
  static const auto table = [] {
    std::array<std::uint64_t, 36> c{};
    c[0] = 1;
    for (std::size_t k = 1; k < c.size(); ++k)
      for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
    return c;
  }();
  if (n < 0 || n >= static_cast<int>(table.size())) throw InputError("catalan: size out of range");
  return table[n];
}

BinaryTree unrank_tree(int n, std::uint64_t index) {
  if (index >= catalan(n)) throw InputError("tree index out of range");
  if (n == 0) return {};
  for (int l = 0; l < n; ++l) {
    const int r = n - 1 - l;
    const std::uint64_t block = catalan(l) * catalan(r);
    if (index < block)
      return BinaryTree::node(unrank_tree(l, index / catalan(r)), unrank_tree(r, index % catalan(r)));
    index -= block;
  }
  throw InvariantError("unrank_tree fell through");
}

std::vector<BinaryTree> enumerate_trees(int n) {
  if (n < 0) throw InputError("tree size must be nonnegative");
  if (n == 0) return {BinaryTree{}};
  std::vector<BinaryTree> out;
  out.reserve(catalan(n));
  for (int l = 0; l < n; ++l) {
    auto ls = enumerate_trees(l);
    auto rs = enumerate_trees(n - 1 - l);
    for (const auto& a : ls)
      for (const auto& b : rs) out.push_back(BinaryTree::node(a, b));
  }
  return out;
}

LabeledTree::LabeledTree(BinaryTree tree, int offset)
    : tree_(std::move(tree)), offset_(offset) {
  const int n = tree_.size();
  lo_.assign(n, 0);
  hi_.assign(n, 0);
  parent_.assign(n, -1);
  std::function<void(int)> fill = [&](int p) {
    lo_[p] = hi_[p] = p;
    if (int l = tree_.left(p); l >= 0) {
      parent_[l] = p;
      fill(l);
      lo_[p] = lo_[l];
    }
    if (int r = tree_.right(p); r >= 0) {
      parent_[r] = p;
      fill(r);
      hi_[p] = hi_[r];
    }
  };
  if (n > 0) fill(tree_.root());
}

int LabeledTree::pos(int v) const {
  if (v < first() || v > last())
    throw InputError("label " + std::to_string(v) + " not in tree");
  return v - offset_ - 1;
}

std::optional<int> LabeledTree::left_child(int v) const {
  int c = tree_.left(pos(v));
  return c < 0 ? std::nullopt : std::optional<int>(label(c));
}

std::optional<int> LabeledTree::right_child(int v) const {
  int c = tree_.right(pos(v));
  return c < 0 ? std::nullopt : std::optional<int>(label(c));
}

std::optional<int> LabeledTree::parent(int v) const {
  int c = parent_[pos(v)];
  return c < 0 ? std::nullopt : std::optional<int>(label(c));
}

PartialOrder::PartialOrder(int first, int size)
    : first_(first), size_(size), rel_(static_cast<std::size_t>(size) * size, 0) {
  for (int i = 0; i < size; ++i) rel_[static_cast<std::size_t>(i) * size + i] = 1;
}

void PartialOrder::close() {
  const int n = size_;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!rel_[static_cast<std::size_t>(i) * n + k]) continue;
      for (int j = 0; j < n; ++j)
        if (rel_[static_cast<std::size_t>(k) * n + j]) rel_[static_cast<std::size_t>(i) * n + j] = 1;
    }
}

bool PartialOrder::is_reflexive() const {
  for (int v = first_; v <= last(); ++v)
    if (!leq(v, v)) return false;
  return true;
}

bool PartialOrder::is_antisymmetric() const {
  for (int i = first_; i <= last(); ++i)
    for (int j = i + 1; j <= last(); ++j)
      if (leq(i, j) && leq(j, i)) return false;
  return true;
}

bool PartialOrder::is_transitive() const {
  for (int i = first_; i <= last(); ++i)
    for (int j = first_; j <= last(); ++j)
      if (leq(i, j))
        for (int k = first_; k <= last(); ++k)
          if (leq(j, k) && !leq(i, k)) return false;
  return true;
}

std::optional<std::vector<int>> PartialOrder::find_cycle() const {
  for (int i = first_; i <= last(); ++i)
    for (int j = first_; j <= last(); ++j)
      if (i != j && leq(i, j) && leq(j, i)) return std::vector<int>{i, j, i};
  return std::nullopt;
}

std::vector<std::pair<int, int>> PartialOrder::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = first_; i <= last(); ++i)
    for (int j = first_; j <= last(); ++j)
      if (lt(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> PartialOrder::covering_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : strict_pairs()) {
    bool cover = true;
    for (int k = first_; k <= last() && cover; ++k)
      if (lt(i, k) && lt(k, j)) cover = false;
    if (cover) out.emplace_back(i, j);
  }
  return out;
}

bool PartialOrder::is_minimal(int v) const {
  for (int i = first_; i <= last(); ++i)
    if (lt(i, v)) return false;
  return true;
}

bool PartialOrder::is_maximal(int v) const {
  for (int j = first_; j <= last(); ++j)
    if (lt(v, j)) return false;
  return true;
}

PartialOrder PartialOrder::restrict(int lo, int hi) const {
  if (lo < first_ || hi > last()) throw InputError("restrict: range outside carrier");
  PartialOrder r(lo, hi - lo + 1);
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j)
      if (leq(i, j)) r.add(i, j);
  return r;
}

PartialOrder tree_order(const LabeledTree& t) {
  PartialOrder p(t.first(), t.size());
  for (int j = t.first(); j <= t.last(); ++j)
    for (int i = t.subtree_lo(j); i <= t.subtree_hi(j); ++i) p.add(i, j);
  return p;
}

std::string render_cycle(const std::vector<int>& cycle) {
  std::string s;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (k) s += " ◁ ";
    s += std::to_string(cycle[k]);
  }
  return s;
}

PartialOrder combine_orders(const std::vector<PartialOrder>& orders, const Deconcatenation& decon) {
  if (orders.size() != decon.segments.size())
    throw InputError("combine_orders: expected " + std::to_string(decon.segments.size()) +
                     " orders, got " + std::to_string(orders.size()));
  const int n = decon.segments.back().hi;
  PartialOrder whole(1, n);
  for (std::size_t k = 0; k < orders.size(); ++k) {
    const auto& o = orders[k];
    const auto& s = decon.segments[k];
    if (o.first() != s.lo || o.last() != s.hi)
      throw InputError("combine_orders: order " + std::to_string(k + 1) + " does not cover its segment");
    for (int i = s.lo; i <= s.hi; ++i)
      for (int j = s.lo; j <= s.hi; ++j)
        if (o.leq(i, j)) whole.add(i, j);
  }
  whole.close();
  if (auto c = whole.find_cycle())
    throw InvariantError("combined order is not antisymmetric: " + render_cycle(*c));
  return whole;
}

}  // namespace qhlin
