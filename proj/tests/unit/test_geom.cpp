#include "hoops/arrangement.hpp"
#include "hoops/error.hpp"
#include "hoops/poly_loop.hpp"

#include "../support/random_loops.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace hoops::geom;

namespace {

Point P(long x, long y) { return Point::from_ints({x, y}); }

PolyLoop loop(std::vector<Point> v)
{
  Point o = v.front();
  return PolyLoop(std::move(o), std::move(v));
}

} // namespace

TEST(Rational, ParseAndFormat)
{
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(format_rational(Rational(-2, 4)), "-1/2");
  EXPECT_THROW(parse_rational("1/0"), hoops::InputError);
  EXPECT_THROW(parse_rational("abc"), hoops::InputError);
  EXPECT_EQ(Point::from_doubles({0.1}).coords()[0], Rational(0.1));
}

TEST(Rational, SegmentIntersections)
{
  using K = SegmentIntersection::Kind;
  const auto x = intersect(P(0, 0), P(2, 2), P(0, 2), P(2, 0));
  ASSERT_EQ(x.kind, K::Point);
  EXPECT_EQ(x.points[0], P(1, 1));
  const auto o = intersect(P(0, 0), P(3, 0), P(1, 0), P(5, 0));
  ASSERT_EQ(o.kind, K::Overlap);
  EXPECT_EQ(o.points[0], P(1, 0));
  EXPECT_EQ(o.points[1], P(3, 0));
  EXPECT_EQ(intersect(P(0, 0), P(1, 0), P(0, 1), P(1, 1)).kind, K::None);
  EXPECT_EQ(intersect(P(0, 0), P(1, 0), P(1, 0), P(2, 0)).kind, K::Point);
  // skew lines in 3-space
  EXPECT_EQ(intersect(Point::from_ints({0, 0, 0}), Point::from_ints({1, 0, 0}), Point::from_ints({0, 1, 1}),
                      Point::from_ints({1, -1, 1}))
              .kind,
            K::None);
  EXPECT_EQ(distance2_point_segment(P(1, 1), P(0, 0), P(2, 0)), Rational(1));
  EXPECT_EQ(distance2_point_segment(P(3, 1), P(0, 0), P(2, 0)), Rational(2));
}

TEST(Rational, SqrtLowerIsBelow)
{
  for (const Rational v : {Rational(2), Rational(1, 3), Rational(49, 36), Rational(0)}) {
    const double r = sqrt_lower(v);
    EXPECT_LE(Rational(r) * Rational(r), v);
    EXPECT_GT(Rational(std::nextafter(r, 10.0)) * Rational(std::nextafter(r, 10.0)), v);
  }
}

TEST(PolyLoop, Invariants)
{
  EXPECT_THROW(PolyPath({P(0, 0)}), hoops::InputError);
  EXPECT_THROW(PolyPath({P(0, 0), P(0, 0), P(1, 0)}), hoops::InputError);
  EXPECT_THROW(PolyLoop(P(0, 0), {P(0, 0), P(1, 0)}), hoops::InputError);
  EXPECT_TRUE(PolyLoop::constant(P(0, 0)).is_constant());
  EXPECT_THROW(PolyLoop::constant(P(0, 0)).path(), hoops::PreconditionError);
}

TEST(PolyLoop, ComposeExamples)
{
  const PolyLoop a = loop({P(0, 0), P(1, 0), P(0, 1), P(0, 0)});
  EXPECT_EQ(spur_reduce(compose(a, PolyLoop::constant(P(0, 0)))), a);
  EXPECT_TRUE(spur_reduce(compose(a, invert_loop(a))).is_constant());
  const PolyLoop b = loop({P(0, 0), P(-1, 0), P(0, -1), P(0, 0)});
  const PolyLoop ab = compose(a, b);
  EXPECT_EQ(ab.vertices(),
            (std::vector<Point>{P(0, 0), P(1, 0), P(0, 1), P(0, 0), P(-1, 0), P(0, -1), P(0, 0)}));
  EXPECT_THROW(compose(a, loop({P(1, 0), P(2, 0), P(1, 1), P(1, 0)})), hoops::InputError);
  EXPECT_THROW(compose(a, PolyLoop::constant(Point::zero(3))), hoops::InputError);
}

TEST(PolyLoop, InvertExamples)
{
  EXPECT_TRUE(invert_loop(PolyLoop::constant(P(0, 0))).is_constant());
  const PolyLoop spur = loop({P(0, 0), P(1, 1), P(0, 0)});
  EXPECT_EQ(invert_loop(spur), spur);
  const PolyLoop sq = loop({P(0, 0), P(1, 0), P(1, 1), P(0, 1), P(0, 0)});
  EXPECT_EQ(invert_loop(sq).vertices(), (std::vector<Point>{P(0, 0), P(0, 1), P(1, 1), P(1, 0), P(0, 0)}));
}

TEST(PolyLoop, SpurReduceExamples)
{
  // o -> p -> q -> p -> r -> o
  const PolyLoop a = loop({P(0, 0), P(2, 0), P(2, 2), P(2, 0), P(0, 2), P(0, 0)});
  EXPECT_EQ(spur_reduce(a).vertices(), (std::vector<Point>{P(0, 0), P(2, 0), P(0, 2), P(0, 0)}));
  EXPECT_TRUE(spur_reduce(loop({P(0, 0), P(3, 1), P(0, 0)})).is_constant());
  // partial backtrack: o -> p -> q -> p' with p' inside [p, q]
  const PolyLoop c = loop({P(0, 0), P(2, 0), P(2, 2), P(2, 1), P(0, 0)});
  EXPECT_EQ(spur_reduce(c).vertices(), (std::vector<Point>{P(0, 0), P(2, 0), P(2, 1), P(0, 0)}));
}

TEST(PolyLoop, SpurReduceCascades)
{
  // Nested spurs collapse completely, including partial ones at the basepoint.
  const PolyLoop a = loop({P(0, 0), P(4, 0), P(4, 4), P(4, 2), P(4, 3), P(4, 0), P(1, 0), P(0, 0)});
  EXPECT_TRUE(spur_reduce(a).is_constant());
}

TEST(PolyLoopProperty, SpurReduceIdempotentAndShrinking)
{
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const PolyLoop a = hoops::testing::random_lattice_loop(rng, 2 + trial % 30, 2);
    const PolyLoop r = spur_reduce(a);
    EXPECT_LE(r.vertices().size(), a.vertices().size());
    EXPECT_EQ(spur_reduce(r), r);
    EXPECT_TRUE(spur_reduce(compose(a, invert_loop(a))).is_constant());
  }
}

TEST(Arrangement, CrossingSegments)
{
  const Arrangement arr = build_arrangement({PolyPath({P(0, 0), P(2, 2)}), PolyPath({P(0, 2), P(2, 0)})});
  EXPECT_EQ(arr.nodes().size(), 5u);
  EXPECT_EQ(arr.edges().size(), 4u);
  EXPECT_GE(arr.node_id(P(1, 1)), 0);
  EXPECT_EQ(arr.incident(arr.node_id(P(1, 1))).size(), 4u);
  EXPECT_EQ(arr.path_edges(0).size(), 2u);
}

TEST(Arrangement, IdenticalSegments)
{
  const Arrangement arr = build_arrangement({PolyPath({P(0, 0), P(3, 1)}), PolyPath({P(3, 1), P(0, 0)})});
  EXPECT_EQ(arr.nodes().size(), 2u);
  EXPECT_EQ(arr.edges().size(), 1u);
  EXPECT_EQ(arr.path_edges(0)[0].dir, -arr.path_edges(1)[0].dir);
}

TEST(Arrangement, FigureEight)
{
  const Arrangement arr = build_arrangement(
    {PolyPath({P(0, 0), P(1, 1), P(1, -1), P(0, 0), P(-1, 1), P(-1, -1), P(0, 0)})});
  EXPECT_EQ(arr.edges().size(), 6u);
  EXPECT_EQ(arr.nodes().size(), 5u);
  EXPECT_EQ(arr.incident(arr.node_id(P(0, 0))).size(), 4u);
}

TEST(Arrangement, OverlapsSplitIntoSharedEdges)
{
  const Arrangement arr = build_arrangement({PolyPath({P(0, 0), P(4, 0)}), PolyPath({P(1, 0), P(6, 0)})});
  // nodes 0,1,4,6 on the axis
  EXPECT_EQ(arr.nodes().size(), 4u);
  EXPECT_EQ(arr.edges().size(), 3u);
}

namespace {

// Brute force: count nodes as the set of endpoints, pairwise crossing points
// and overlap ends, independently of the sweep inside build_arrangement.
std::set<Point> brute_force_nodes(const PolyLoop& l)
{
  std::set<Point> out;
  const auto& v = l.vertices();
  for (std::size_t i = 1; i < v.size(); ++i) {
    out.insert(v[i - 1]);
    out.insert(v[i]);
    for (std::size_t j = i + 1; j < v.size(); ++j)
      for (const Point& p : intersect(v[i - 1], v[i], v[j - 1], v[j]).points)
        out.insert(p);
  }
  return out;
}

} // namespace

TEST(ArrangementProperty, NodesMatchBruteForceAndEdgesAreDisjoint)
{
  using K = SegmentIntersection::Kind;
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const PolyLoop l = hoops::testing::random_lattice_loop(rng, 3 + trial % 20, 3, 2 + trial % 2);
    const Arrangement arr = build_arrangement({l.path()});
    const auto expected = brute_force_nodes(l);
    EXPECT_EQ(std::set<Point>(arr.nodes().begin(), arr.nodes().end()), expected);
    const auto& e = arr.edges();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        const auto x = intersect(arr.nodes()[e[i].a], arr.nodes()[e[i].b], arr.nodes()[e[j].a], arr.nodes()[e[j].b]);
        ASSERT_NE(x.kind, K::Overlap);
        if (x.kind == K::Point) {
          const int n = arr.node_id(x.points[0]);
          EXPECT_TRUE(n == e[i].a || n == e[i].b);
          EXPECT_TRUE(n == e[j].a || n == e[j].b);
        }
      }
    // the loop's chain is connected and closed
    const auto& chain = arr.path_edges(0);
    EXPECT_EQ(arr.start(chain.front()), l.basepoint());
    EXPECT_EQ(arr.end(chain.back()), l.basepoint());
    for (std::size_t i = 1; i < chain.size(); ++i)
      EXPECT_EQ(arr.end(chain[i - 1]), arr.start(chain[i]));
  }
}
