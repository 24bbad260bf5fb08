#include "hoops/counterexample.hpp"
#include "hoops/error.hpp"
#include "hoops/formats.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hoops;

TEST(LoopFormat, ParsesRationalsAndRoundTrips)
{
  const auto loop = io::parse_loop(R"({"dim": 2, "basepoint": ["0", "0"],
    "vertices": [["0", "0"], ["1/2", 0], ["0.25", "3/4"], [0, 0]]})");
  EXPECT_EQ(loop.vertices()[2], geom::Point({geom::Rational(1, 4), geom::Rational(3, 4)}));
  EXPECT_EQ(io::parse_loop(io::format_loop(loop)), loop);
  const auto constant = io::parse_loop(R"({"dim": 3, "basepoint": ["1", "2", "3"], "vertices": [["1", "2", "3"]]})");
  EXPECT_TRUE(constant.is_constant());
}

TEST(LoopFormat, RejectsMalformedInput)
{
  EXPECT_THROW(io::parse_loop("{"), InputError);
  EXPECT_THROW(io::parse_loop(R"({"dim": 2, "basepoint": ["0", "0"]})"), InputError);
  EXPECT_THROW(io::parse_loop(R"({"dim": 2, "basepoint": ["0", "0"], "vertices": [["0", "0"], [0.5, 0], ["0", "0"]]})"),
               InputError);
  EXPECT_THROW(io::parse_loop(R"({"dim": 2, "basepoint": ["0", "0"], "vertices": [["0", "0", "1"]]})"), InputError);
  EXPECT_THROW(io::parse_loop(R"({"dim": 2, "basepoint": ["0", "0"], "vertices": [["0", "0"], ["1", "0"]]})"),
               InputError);
  EXPECT_THROW(io::parse_loop(R"({"dim": 2, "basepoint": ["0", "x"], "vertices": [["0", "0"]]})"), InputError);
}

TEST(WordFormat, Examples)
{
  EXPECT_EQ(io::parse_word("[2, 3, -1]"), words::Word::from_signed({2, 3, -1}));
  EXPECT_TRUE(io::parse_word("[]").empty());
  EXPECT_EQ(io::format_word(words::Word::from_signed({1, -2})), "[1,-2]");
  EXPECT_THROW(io::parse_word("[1, 0]"), InputError);
  EXPECT_THROW(io::parse_word("[1.5]"), InputError);
  EXPECT_THROW(io::parse_word("{}"), InputError);
}

TEST(ConnectionFormat, RoundTripsEveryGroup)
{
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (auto name : {gauge::GroupName::U1, gauge::GroupName::SU2, gauge::GroupName::SO3, gauge::GroupName::SL2R}) {
    const auto spec = gauge::LieGroupSpec::make(name);
    const auto a = gauge::random_connection(spec, {{-1, -1, -1}, {1, 1, 1}}, 5, 7);
    const auto b = io::parse_connection(io::format_connection(a));
    ASSERT_EQ(b.terms().size(), a.terms().size());
    EXPECT_EQ(b.spec(), a.spec());
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
      EXPECT_EQ(b.terms()[i].center, a.terms()[i].center);
      EXPECT_EQ(b.terms()[i].radius, a.terms()[i].radius);
      EXPECT_EQ(b.terms()[i].axis, a.terms()[i].axis);
      EXPECT_EQ(b.terms()[i].coefficient, a.terms()[i].coefficient);
    }
    const double x[3] = {coord(rng), coord(rng), coord(rng)}, v[3] = {1.0, -0.5, 0.25};
    EXPECT_EQ(a.evaluate(x, v), b.evaluate(x, v));
  }
}

TEST(ConnectionFormat, RejectsMalformedInput)
{
  EXPECT_THROW(io::parse_connection(R"({"group": "so4", "dim": 2, "terms": []})"), InputError);
  EXPECT_THROW(io::parse_connection(R"({"group": "u1", "dim": 2, "terms": [{"center": [0, 0], "radius": 1,
    "axis": 1, "coeff_matrix": [[1]]}]})"),
               InputError); // 1 is not in u(1)
  EXPECT_THROW(io::parse_connection(R"({"group": "u1", "dim": 2, "terms": [{"center": [0, 0], "radius": 1,
    "axis": 3, "coeff_matrix": [[[0, 1]]]}]})"),
               InputError);
  EXPECT_NO_THROW(io::parse_connection(R"({"group": "u1", "dim": 2, "terms": [{"center": [0, 0], "radius": 1,
    "axis": 2, "coeff_matrix": [[[0, 1]]]}]})"));
}

TEST(DecompositionFormat, RoundTrips)
{
  const auto loop = io::parse_loop(R"({"dim": 2, "basepoint": ["0", "0"],
    "vertices": [["0", "0"], ["2", "2"], ["2", "0"], ["0", "2"], ["0", "0"]]})");
  const auto rec = io::record_of(geom::decompose(loop));
  ASSERT_EQ(rec.generators.size(), 2u);
  EXPECT_EQ(io::parse_decomposition(io::format_decomposition(rec)), rec);
}

TEST(GraphCurveFormat, RoundTripsAndCsv)
{
  const auto fam = pathology::counterexample_family(3);
  const auto c = fam.curves[1].with_factors({{0.5, 0.01}});
  const auto back = io::parse_graph_curve(io::format_graph_curve(c));
  EXPECT_EQ(back.atoms(), c.atoms());
  EXPECT_EQ(back.factors(), c.factors());
  EXPECT_EQ(io::parse_graph_curve(R"({"atoms": [{"level": 2, "scale": 0.5}]})").atoms()[0].sign, 1);
  EXPECT_THROW(io::parse_graph_curve(R"({"atoms": [{"level": 0, "scale": 0.5}]})"), InputError);

  const std::string csv = io::curves_csv({fam.curves[0], fam.curves[1]}, 2, 11);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "x,c1_d0,c1_d1,c1_d2,c2_d0,c2_d1,c2_d2");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);
}
