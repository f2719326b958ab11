#include <doctest.h>

#include <random>

#include "qhlin/errors.hpp"
#include "qhlin/linquiver.hpp"
#include "qhlin/rep_oracle.hpp"

using namespace qhlin;

TEST_CASE("parse orientation strings") {
  auto q = LinearQuiver::parse("RRRRR");
  CHECK(q.size() == 6);
  for (int k = 1; k <= 5; ++k) CHECK(q.edge(k) == Direction::Right);

  auto p = LinearQuiver::parse("RRLLRR");
  CHECK(p.size() == 7);
  CHECK(p.arrow_source(2) == 2);
  CHECK(p.arrow_target(2) == 3);
  CHECK(p.arrow_source(3) == 4);
  CHECK(p.arrow_target(3) == 3);
  CHECK(p.is_sink(3));
  CHECK(p.is_source(5));
  CHECK(p.orientation() == "RRLLRR");

  CHECK_THROWS_AS(LinearQuiver::parse("RX"), InputError);
  CHECK(LinearQuiver::single_vertex().size() == 1);
  CHECK(LinearQuiver::parse("").size() == 1);
}

TEST_CASE("deconcatenation examples") {
  auto d = deconcatenate(LinearQuiver::parse("RRLLRR"));
  REQUIRE(d.segments.size() == 3);
  CHECK(d.segments[0] == Segment{1, 3, SegmentDirection::A});
  CHECK(d.segments[1] == Segment{3, 5, SegmentDirection::B});
  CHECK(d.segments[2] == Segment{5, 7, SegmentDirection::A});
  CHECK(d.cuts == std::vector<Cut>{{3, CutKind::Sink}, {5, CutKind::Source}});

  auto e = deconcatenate(LinearQuiver::parse("LLRR"));
  REQUIRE(e.segments.size() == 2);
  CHECK(e.segments[0] == Segment{1, 3, SegmentDirection::B});
  CHECK(e.segments[1] == Segment{3, 5, SegmentDirection::A});
  CHECK(e.cuts == std::vector<Cut>{{3, CutKind::Source}});

  auto u = deconcatenate(LinearQuiver::parse("RRR"));
  CHECK(u.segments == std::vector<Segment>{{1, 4, SegmentDirection::A}});
  CHECK(u.cuts.empty());

  auto one = deconcatenate(LinearQuiver::single_vertex());
  CHECK(one.segments == std::vector<Segment>{{1, 1, SegmentDirection::A}});
}

TEST_CASE("path examples") {
  auto a6 = LinearQuiver::parse("RRRRR");
  auto p = path_between(a6, 2, 4);
  REQUIRE(p);
  CHECK(p->render() == "α_3α_2");
  CHECK(p->length() == 2);

  auto q = LinearQuiver::parse("RRLLRR");
  auto back = path_between(q, 5, 3);
  REQUIRE(back);
  CHECK(back->edges() == std::vector<int>{4, 3});
  CHECK(back->render() == "α_3α_4");
  CHECK(back->segment == Segment{3, 5, SegmentDirection::B});
  CHECK_FALSE(path_between(q, 3, 5));
  CHECK(path_between(q, 4, 4)->render() == "e_4");
  CHECK_THROWS_AS(path_between(q, 0, 3), InputError);
  CHECK_THROWS_AS(path_between(q, 1, 8), InputError);
}

namespace {

LinearQuiver random_quiver(std::mt19937& rng, int n) {
  std::vector<Direction> e;
  for (int k = 1; k < n; ++k) e.push_back(rng() & 1 ? Direction::Right : Direction::Left);
  return LinearQuiver(e);
}

}  // namespace

TEST_CASE("segments tile the quiver and reproduce the orientation") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto q = random_quiver(rng, 1 + static_cast<int>(rng() % 9));
    auto d = deconcatenate(q);
    CHECK(d.segments.front().lo == 1);
    CHECK(d.segments.back().hi == q.size());
    std::string rebuilt;
    for (std::size_t k = 0; k < d.segments.size(); ++k) {
      const auto& s = d.segments[k];
      if (k > 0) CHECK(s.lo == d.segments[k - 1].hi);
      if (k > 0) CHECK(s.direction != d.segments[k - 1].direction);
      rebuilt += std::string(s.size() - 1, s.direction == SegmentDirection::A ? 'R' : 'L');
    }
    CHECK(rebuilt == q.orientation());
    REQUIRE(d.cuts.size() + 1 == d.segments.size());
    for (const auto& c : d.cuts) CHECK((c.kind == CutKind::Sink ? q.is_sink(c.vertex) : q.is_source(c.vertex)));
  }
}

// With covariant representations, P(j) has support on vertices reachable from j,
// so a path i to j exists exactly when P(i) has a nonzero space at j.
TEST_CASE("paths match morphisms between projectives") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto q = random_quiver(rng, 1 + static_cast<int>(rng() % 8));
    for (int i = 1; i <= q.size(); ++i)
      for (int j = 1; j <= q.size(); ++j) {
        const int h = hom_dim_oracle(q, rep_of_interval(q, projective_support(q, j)),
                                     rep_of_interval(q, projective_support(q, i)));
        CHECK(path_between(q, i, j).has_value() == (h == 1));
        CHECK(h <= 1);
      }
  }
}
