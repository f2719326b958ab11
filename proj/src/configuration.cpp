#include "qhlin/configuration.hpp"

#include "qhlin/errors.hpp"

namespace qhlin {

Configuration Configuration::make(const LinearQuiver& q, const std::vector<BinaryTree>& shapes) {
  Deconcatenation d = deconcatenate(q);
  if (shapes.size() != d.segments.size())
    throw InputError("expected " + std::to_string(d.segments.size()) + " trees, got " +
                     std::to_string(shapes.size()));
  std::vector<LabeledTree> trees;
  std::vector<StructureTable> tables;
  std::vector<PartialOrder> orders;
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    const Segment& s = d.segments[k];
    if (shapes[k].size() != s.size())
      throw InputError("tree " + std::to_string(k + 1) + " has " + std::to_string(shapes[k].size()) +
                       " nodes but segment " + std::to_string(s.lo) + ".." + std::to_string(s.hi) +
                       " has " + std::to_string(s.size()) + " vertices");
    trees.emplace_back(shapes[k], s.lo - 1);
    tables.emplace_back(trees.back(), s);
    orders.push_back(tree_order(trees.back()));
  }
  PartialOrder order = combine_orders(orders, d);
  return {q, std::move(d), std::move(trees), std::move(tables), std::move(order)};
}

std::vector<std::string> split_trees(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t semi = s.find(';', start);
    out.emplace_back(s.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

Configuration Configuration::parse(std::string_view orientation, std::string_view trees) {
  std::vector<BinaryTree> shapes;
  for (const auto& t : split_trees(trees)) shapes.push_back(BinaryTree::parse(t));
  return make(LinearQuiver::parse(orientation), shapes);
}

std::vector<std::string> Configuration::tree_strings() const {
  std::vector<std::string> out;
  for (const auto& t : trees) out.push_back(t.tree().str());
  return out;
}

std::vector<LinearQuiver> orientations(int n, int max_cuts) {
  if (n < 1) throw InputError("quiver needs at least one vertex");
  std::vector<LinearQuiver> out;
  const int m = n - 1;
  for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
    std::vector<Direction> e;
    for (int k = m - 1; k >= 0; --k) e.push_back((bits >> k) & 1u ? Direction::Right : Direction::Left);
    int changes = 0;
    for (int k = 1; k < m; ++k) changes += e[k] != e[k - 1];
    if (changes <= max_cuts) out.emplace_back(std::move(e));
  }
  return out;
}

std::uint64_t combination_count(const Deconcatenation& d) {
  std::uint64_t c = 1;
  for (const auto& s : d.segments) c *= catalan(s.size());
  return c;
}

std::vector<BinaryTree> combination(const Deconcatenation& d, std::uint64_t index) {
  std::vector<BinaryTree> out(d.segments.size());
  for (std::size_t k = d.segments.size(); k-- > 0;) {
    const std::uint64_t c = catalan(d.segments[k].size());
    out[k] = unrank_tree(d.segments[k].size(), index % c);
    index /= c;
  }
  return out;
}

}  // namespace qhlin
