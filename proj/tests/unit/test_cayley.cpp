#include "hoops/cayley.hpp"
#include "hoops/error.hpp"

#include <gtest/gtest.h>

using namespace hoops::words;

namespace {

std::vector<std::size_t> sizes(const std::vector<ElementSet>& series)
{
  std::vector<std::size_t> out;
  for (const auto& s : series)
    out.push_back(s.size());
  return out;
}

} // namespace

TEST(Cayley, StandardGroupsValidate)
{
  EXPECT_EQ(CayleyTable::cyclic(4).order(), 4);
  EXPECT_EQ(CayleyTable::symmetric(3).order(), 6);
  EXPECT_EQ(CayleyTable::alternating(5).order(), 60);
  EXPECT_EQ(CayleyTable::direct_product(CayleyTable::cyclic(2), CayleyTable::symmetric(3)).order(), 12);
}

TEST(Cayley, RejectsInvalidTables)
{
  // row 0 not the identity
  EXPECT_THROW(CayleyTable({{1, 0}, {0, 1}}), hoops::InputError);
  // not a Latin square
  EXPECT_THROW(CayleyTable({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}), hoops::InputError);
  // Latin square with identity but not associative (order-5 loop)
  EXPECT_THROW(CayleyTable({{0, 1, 2, 3, 4},
                            {1, 0, 3, 4, 2},
                            {2, 4, 0, 1, 3},
                            {3, 2, 4, 0, 1},
                            {4, 3, 1, 2, 0}}),
               hoops::InputError);
  EXPECT_THROW(CayleyTable({{0, 5}, {1, 0}}), hoops::InputError);
}

TEST(Cayley, TextRoundTrip)
{
  const CayleyTable s3 = CayleyTable::symmetric(3);
  const CayleyTable back = CayleyTable::parse(s3.to_text());
  EXPECT_EQ(back.rows(), s3.rows());
  EXPECT_EQ(CayleyTable::parse("# Z2\n2\n0 1\n1 0\n").order(), 2);
  EXPECT_THROW(CayleyTable::parse("2\n0 1\n1\n"), hoops::InputError);
  EXPECT_THROW(CayleyTable::parse("2\n0 x\n1 0\n"), hoops::InputError);
}

TEST(DerivedSeries, Examples)
{
  EXPECT_EQ(sizes(derived_series(CayleyTable::cyclic(4))), (std::vector<std::size_t>{4, 1}));
  // S3 > A3 > 1
  EXPECT_EQ(sizes(derived_series(CayleyTable::symmetric(3))), (std::vector<std::size_t>{6, 3, 1}));
  // A5 is perfect
  const auto a5 = derived_series(CayleyTable::alternating(5));
  ASSERT_EQ(a5.size(), 2u);
  EXPECT_EQ(a5[0], a5[1]);
  EXPECT_EQ(a5[1].size(), 60u);
}

TEST(DerivedSeries, S3DerivedIsTheEvenPermutations)
{
  // Elements of symmetric(3) are indexed by sorted permutation order:
  // 012, 021, 102, 120, 201, 210 -> even ones are 0, 3, 4.
  const auto series = derived_series(CayleyTable::symmetric(3));
  EXPECT_EQ(series[1], (ElementSet{0, 3, 4}));
}

TEST(Solvable, Examples)
{
  EXPECT_TRUE(is_solvable(CayleyTable::symmetric(3)));
  EXPECT_FALSE(is_solvable(CayleyTable::alternating(5)));
  EXPECT_TRUE(is_solvable(CayleyTable::cyclic(1)));
  EXPECT_TRUE(is_solvable(CayleyTable::symmetric(4)));
  EXPECT_FALSE(is_solvable(CayleyTable::symmetric(5)));
}
