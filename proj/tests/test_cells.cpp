#include <gtest/gtest.h>

#include "nakayama/cells.hpp"
#include "nakayama/grammar.hpp"

using namespace nakayama;

namespace {

Descriptor D(const std::string& text, const AlgebraContext& ctx) { return parse_descriptor(text, ctx); }

}  // namespace

TEST(Cells, TwoSidedCells) {
  const AlgebraContext ctx(2);
  EXPECT_EQ(two_sided_cell(D("L(1|1)", ctx)), TwoSidedCellId::split());
  EXPECT_EQ(two_sided_cell(D("M(1|1,0)", ctx)), TwoSidedCellId::J(0));
  EXPECT_EQ(two_sided_cell(D("W(2|1,3)", ctx)), TwoSidedCellId::J(3));
  EXPECT_EQ(two_sided_cell(D("B(2,3,-1)", ctx)), TwoSidedCellId::band());
  EXPECT_EQ(j_order(TwoSidedCellId::split(), TwoSidedCellId::J(0)), Order::greater);
  EXPECT_EQ(j_order(TwoSidedCellId::J(2), TwoSidedCellId::J(1)), Order::less);
  EXPECT_EQ(j_order(TwoSidedCellId::J(4), TwoSidedCellId::J(4)), Order::equal);
  EXPECT_EQ(j_order(TwoSidedCellId::band(), TwoSidedCellId::J(100)), Order::less);
  EXPECT_STREQ(to_string(Order::greater), "greater");
}

TEST(Cells, Keys) {
  const AlgebraContext ctx(2);
  EXPECT_EQ(classify(D("M(1|1,0)", ctx)), "J(0); left=(col 1, width 2, MN); right=(row 1, height 2, MS)");
  EXPECT_EQ(classify(D("L(1|2)", ctx)), "Split; left=S_right:2; right=S_left:1");
  EXPECT_EQ(classify(D("B(1,2,3)", ctx)), "Band; left=band; right=band");
  // N and M of equal width at the same column share a left cell
  EXPECT_EQ(left_cell_key(D("N(2|1,1)", ctx)), left_cell_key(D("M(1|1,1)", ctx)));
  EXPECT_NE(right_cell_key(D("N(1|1,1)", ctx)), right_cell_key(D("M(1|1,1)", ctx)));
}

TEST(Cells, Enumeration) {
  EXPECT_EQ(enumerate_cell(TwoSidedCellId::J(0), AlgebraContext(2)).size(), 4u);
  EXPECT_EQ(enumerate_cell(TwoSidedCellId::split(), AlgebraContext(1)).size(), 4u);
  EXPECT_EQ(enumerate_cell(TwoSidedCellId::J(1), AlgebraContext(1)).size(), 4u);
  EXPECT_EQ(enumerate_cell(TwoSidedCellId::J(2), AlgebraContext(3)).size(), 36u);
  EXPECT_EQ(enumerate_cell(TwoSidedCellId::split(), AlgebraContext(3)).size(), 36u);
  EXPECT_THROW(enumerate_cell(TwoSidedCellId::band(), AlgebraContext(2)), std::domain_error);
}

TEST(Cells, StrongRegularity) {
  for (int n = 1; n <= 4; ++n) {
    const AlgebraContext ctx(n);
    EXPECT_TRUE(check_strong_regularity(TwoSidedCellId::split(), ctx).ok);
    for (int k = 0; k <= 3; ++k) {
      const auto r = check_strong_regularity(TwoSidedCellId::J(k), ctx);
      EXPECT_TRUE(r.ok) << r.message;
    }
  }
}

TEST(Cells, MergedKeysBreakRegularity) {
  const AlgebraContext ctx(2);
  const KeyFunction coarse = [](const Descriptor& d) {
    const auto& s = std::get<StringDescriptor>(d);
    return CellKey{std::to_string(height(s))};
  };
  const auto r = check_strong_regularity(TwoSidedCellId::J(1), ctx, left_cell_key, coarse);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.counterexample.has_value());
}

TEST(Cells, Witnesses) {
  const AlgebraContext ctx(3);
  WitnessSearch search(ctx);
  const Descriptor m1 = D("M(1|1,1)", ctx);
  EXPECT_EQ(search.find_left(m1, m1), Descriptor(make_band(1, 1, 1, ctx)));
  EXPECT_EQ(search.find_right(m1, m1), Descriptor(make_band(1, 1, 1, ctx)));

  for (int k = 1; k <= 3; ++k) {
    const Descriptor mk = make_string(StringType::M, 1, 1, k, ctx);
    const Descriptor lower = make_string(StringType::M, 1, 2, k - 1, ctx);
    const auto z = search.find_left(lower, mk);
    ASSERT_TRUE(z.has_value()) << k;
    EXPECT_TRUE(symbolic_tensor(*z, mk, ctx).contains(lower));
    EXPECT_TRUE(search.product(mk, mk).contains(lower));
  }

  // more valleys are never reached from fewer
  EXPECT_FALSE(search.find_two_sided(D("M(1|1,2)", ctx), m1).has_value());
  // strings sit above bands
  EXPECT_TRUE(search.find_left(m1, D("B(1,2,1)", ctx)).has_value());
  EXPECT_FALSE(search.find_two_sided(D("B(1,1,1)", ctx), m1).has_value());
  // splits sit above strings
  EXPECT_TRUE(search.find_two_sided(D("L(1|1)", ctx), m1).has_value());
}

TEST(Cells, Partitions) {
  for (int n = 1; n <= 3; ++n) {
    const AlgebraContext ctx(n);
    WitnessSearch search(ctx);
    for (const auto& id : {TwoSidedCellId::split(), TwoSidedCellId::J(0), TwoSidedCellId::J(1)}) {
      const auto l = check_partition(id, Side::left, search, left_cell_key);
      const auto r = check_partition(id, Side::right, search, right_cell_key);
      EXPECT_TRUE(l.ok) << id.str() << " " << l.message;
      EXPECT_TRUE(r.ok) << id.str() << " " << r.message;
    }
  }
}

TEST(Cells, PartitionRejectsWrongKey) {
  const AlgebraContext ctx(2);
  WitnessSearch search(ctx);
  EXPECT_FALSE(check_partition(TwoSidedCellId::J(1), Side::left, search, right_cell_key).ok);
  EXPECT_FALSE(check_partition(TwoSidedCellId::split(), Side::right, search, left_cell_key).ok);
}

TEST(Cells, Reports) {
  const AlgebraContext ctx(1);
  const auto rows = partition_rows({D("L(1|1)", ctx), D("M(1|1,0)", ctx)});
  EXPECT_EQ(to_csv(rows),
            "descriptor,two_sided_cell,left_key,right_key\n"
            "\"split(Sl:1,Sr:1)\",Split,\"S_right:1\",\"S_left:1\"\n"
            "\"M(1|1,0)\",J(0),\"(col 1, width 2, MN)\",\"(row 1, height 2, MS)\"\n");
  const auto j = to_json(rows);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["two_sided_cell"], "J(0)");
  EXPECT_EQ(j[0]["left_key"], "S_right:1");
}
