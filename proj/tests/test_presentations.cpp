#include <doctest.h>

#include <set>

#include "qhlin/configuration.hpp"
#include "qhlin/errors.hpp"
#include "qhlin/presentations.hpp"

using namespace qhlin;

namespace {

StructureTable table(const std::string& tree, const Segment& seg) {
  return StructureTable(LabeledTree(BinaryTree::parse(tree), seg.lo - 1), seg);
}

std::set<std::string> arrow_names(const MonomialPresentation& p) {
  std::set<std::string> s;
  for (const auto& a : p.arrows()) s.insert(a.name());
  return s;
}

std::set<std::string> relations(const MonomialPresentation& p) {
  auto v = p.relation_names();
  return {v.begin(), v.end()};
}

const Segment kA6{1, 6, SegmentDirection::A};

ArrowPath path_of(const MonomialPresentation& p, std::initializer_list<const char*> names_inner_first) {
  ArrowPath r;
  bool first = true;
  for (const char* n : names_inner_first) {
    std::size_t k = 0;
    while (p.arrows()[k].name() != n) ++k;
    if (first) {
      r = p.arrow_path(k);
      first = false;
    } else {
      auto m = multiply(p, p.arrow_path(k), r);
      REQUIRE(m);
      r = *m;
    }
  }
  return r;
}

MonomialPresentation llrr_glued() {
  auto c = Configuration::parse("LLRR", "(((..).).);(((..).).)");
  return glue(ext_algebra(c.tables[0]), ext_algebra(c.tables[1]), 3);
}

}  // namespace

TEST_CASE("Ext presentation of the root-4 tree") {
  auto p = ext_algebra(table("(((..)(..))(.(..)))", kA6));
  CHECK(arrow_names(p) == std::set<std::string>{"ε_1^2", "ε_2^4", "f_3^2", "f_5^4", "f_6^5"});
  for (const auto& a : p.arrows()) CHECK(a.degree == (a.kind == ArrowKind::Epsilon ? 1 : 0));
  CHECK(relations(p) == std::set<std::string>{"ε_2^4∘ε_1^2"});

  CHECK(ext_algebra(table("(..)", Segment{1, 1, SegmentDirection::A})).arrows().empty());

  auto chain = ext_algebra(table("(.(.(..)))", Segment{1, 3, SegmentDirection::A}));
  CHECK(arrow_names(chain) == std::set<std::string>{"f_2^1", "f_3^2"});
  CHECK(chain.forbidden().empty());
}

TEST_CASE("Ringel dual presentations") {
  auto p = ringel_dual(table("(((..)(..))(.(..)))", kA6));
  CHECK(arrow_names(p) == std::set<std::string>{"f_4^2", "f_2^1", "g_3^2", "g_5^4", "g_6^5"});
  CHECK(relations(p) == std::set<std::string>{"f_4^2∘g_5^4", "f_2^1∘g_3^2"});
  CHECK(ringel_dual(table("(..)", Segment{2, 2, SegmentDirection::A})).arrows().empty());
  auto left = ringel_dual(table("(((..).).)", Segment{1, 3, SegmentDirection::A}));
  CHECK(arrow_names(left) == std::set<std::string>{"f_3^2", "f_2^1"});
  CHECK(left.forbidden().empty());
  for (const auto& a : p.arrows()) CHECK(a.degree == 0);
}

TEST_CASE("gluing at a source") {
  auto g = llrr_glued();
  CHECK(arrow_names(g) == std::set<std::string>{"f_1^2", "f_2^3", "ε_3^4", "ε_4^5"});
  CHECK(relations(g) == std::set<std::string>{"ε_4^5∘ε_3^4", "ε_3^4∘f_2^3"});
  auto b = basis(g);
  CHECK(b.total() == 10);

  auto c = Configuration::parse("LLRR", "(((..).).);(((..).).)");
  auto one = MonomialPresentation({3}, {}, {});
  auto p = ext_algebra(c.tables[0]);
  auto q = glue(p, one, 3);
  CHECK(q.arrows() == p.arrows());
  CHECK(q.forbidden() == p.forbidden());
  CHECK_THROWS_AS(glue(p, p, 3), InputError);
}

TEST_CASE("glued dimension is the sum minus one") {
  for (const auto& q : orientations(6, 1)) {
    const auto d = deconcatenate(q);
    if (d.cuts.size() != 1) continue;
    for (std::uint64_t i = 0; i < combination_count(d); i += 5) {
      auto c = Configuration::make(q, combination(d, i));
      auto p1 = ext_algebra(c.tables[0]), p2 = ext_algebra(c.tables[1]);
      CHECK(basis(glue(p1, p2, d.cuts[0].vertex)).total() == basis(p1).total() + basis(p2).total() - 1);
    }
  }
}

TEST_CASE("mirrored LLRR configuration") {
  auto c = Configuration::parse("LLRR", "(.(.(..)));(.(.(..)))");
  auto g = glue(ext_algebra(c.tables[0]), ext_algebra(c.tables[1]), 3);
  CHECK(basis(g).total() == 10);
  CHECK(relations(g) == std::set<std::string>{"ε_2^1∘ε_3^2", "ε_3^2∘f_4^3"});
}

TEST_CASE("basis cells of the root-4 presentation") {
  auto p = ext_algebra(table("(((..)(..))(.(..)))", kA6));
  auto b = basis(p);
  CHECK(b.dim(3, 4, 1) == 1);
  CHECK(p.render(b.cells().at({3, 4, 1}).front()) == "ε_2^4∘f_3^2");
  CHECK(b.dim(1, 4, 1) == 0);
  for (int i = 1; i <= 6; ++i) CHECK(b.dim(i, i, 0) == 1);
  CHECK(b.total() == 13);
}

TEST_CASE("cell dimensions match closed-form Hom and Ext") {
  for (auto dir : {SegmentDirection::A, SegmentDirection::B})
    for (int n = 1; n <= 7; ++n) {
      const Segment seg{1, n, dir};
      for (const auto& s : enumerate_trees(n)) {
        StructureTable t(LabeledTree(s, 0), seg);
        auto b = basis(ext_algebra(t));
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            CHECK(b.dim(i, j, 0) == hom_dim(seg, t.standard(i), t.standard(j)));
            CHECK(b.dim(i, j, 1) == ext1_dim(seg, t.standard(i), t.standard(j)));
            CHECK(b.dim(i, j, 2) == 0);
          }
      }
    }
}

TEST_CASE("multiplication") {
  auto p = ext_algebra(table("(((..)(..))(.(..)))", kA6));
  auto x = path_of(p, {"f_3^2", "ε_2^4"});
  CHECK(x.source == 3);
  CHECK(x.target == 4);
  CHECK(x.degree == 1);
  auto e12 = path_of(p, {"ε_1^2"}), e24 = path_of(p, {"ε_2^4"});
  CHECK_FALSE(multiply(p, e24, e12));
  auto id = p.identity(2);
  CHECK(multiply(p, id, id) == id);
  CHECK(multiply(p, e24, id) == e24);
  CHECK_FALSE(multiply(p, e12, e24));
}

TEST_CASE("basis rejects cyclic quivers") {
  MonomialPresentation p({1, 2}, {{ArrowKind::F, 1, 2, 0}, {ArrowKind::G, 2, 1, 0}}, {});
  CHECK_THROWS_AS(basis(p), InvariantError);
}

TEST_CASE("forbidden pairs must be composable") {
  Arrow a{ArrowKind::F, 1, 2, 0}, b{ArrowKind::F, 3, 4, 0};
  CHECK_THROWS_AS(MonomialPresentation({1, 2, 3, 4}, {a, b}, {{b, a}}), InputError);
}

TEST_CASE("formality examples") {
  auto root4 = formality_check(ext_algebra(table("(((..)(..))(.(..)))", kA6)));
  CHECK(root4.passed);
  CHECK(root4.witnesses.empty());
  CHECK(formality_check(MonomialPresentation({1}, {}, {})).passed);
  auto g = formality_check(llrr_glued());
  CHECK(g.passed);
  CHECK(g.chains_checked > 0);
}

TEST_CASE("formality detects a degree-compatible target") {
  MonomialPresentation p({1, 2, 3, 4},
                         {{ArrowKind::Epsilon, 1, 2, 1}, {ArrowKind::F, 2, 3, 0}, {ArrowKind::F, 3, 4, 0},
                          {ArrowKind::F, 1, 4, 0}},
                         {});
  auto r = formality_check(p);
  CHECK_FALSE(r.passed);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front().find("(1,4,0)") != std::string::npos);
}

TEST_CASE("three degree-zero inputs never reach a checked degree") {
  MonomialPresentation p({1, 2, 3, 4},
                         {{ArrowKind::F, 1, 2, 0}, {ArrowKind::F, 2, 3, 0}, {ArrowKind::F, 3, 4, 0},
                          {ArrowKind::Epsilon, 1, 4, 1}},
                         {{{ArrowKind::F, 2, 3, 0}, {ArrowKind::F, 1, 2, 0}}});
  CHECK(formality_check(p).passed);
}
