#include <gtest/gtest.h>

#include "nakayama/certify.hpp"
#include "nakayama/decompose.hpp"
#include "nakayama/grammar.hpp"
#include "nakayama/realize.hpp"
#include "nakayama/tensor_oracle.hpp"
#include "nakayama/tensor_rules.hpp"
#include "nakayama/universe.hpp"

using namespace nakayama;

namespace {

Multiset sym(const std::string& a, const std::string& b, const AlgebraContext& ctx) {
  return symbolic_tensor(parse_descriptor(a, ctx), parse_descriptor(b, ctx), ctx);
}

Multiset oracle(const Descriptor& a, const Descriptor& b, const AlgebraContext& ctx) {
  const auto rep = decompose(tensor(realize(a, ctx), realize(b, ctx)), ctx);
  EXPECT_TRUE(fully_identified(rep));
  return rep.multiset;
}

void expect_product(int n, const std::string& a, const std::string& b, const std::string& expected) {
  const AlgebraContext ctx(n);
  const Multiset want = parse_multiset(expected, ctx);
  EXPECT_EQ(sym(a, b, ctx), want) << a << " (x) " << b;
  EXPECT_EQ(oracle(parse_descriptor(a, ctx), parse_descriptor(b, ctx), ctx), want) << a << " (x) " << b;
}

}  // namespace

TEST(TensorRules, BandBand) {
  expect_product(2, "B(1,2,1)", "B(1,3,1)", "B(1,2,1) + B(1,4,1)");
  expect_product(2, "B(1,2,1)", "B(1,2,1)", "B(1,1,1) + B(1,3,1)");
  expect_product(3, "B(2,1,2)", "B(2,1,3)", "B(3,1,6)");
  expect_product(2, "B(2,1,2)", "B(2,2,-1)", "B(1,2,-2)");
  expect_product(1, "B(1,2,3)", "B(1,2,1/3)", "B(1,1,1) + B(1,3,1)");
  expect_product(3, "B(1,1,1)", "B(3,2,5)", "B(3,2,5)");
  expect_product(2, "B(1,1,2)", "B(1,1,3)", "B(1,1,6)");
}

TEST(TensorRules, BandIndexIsAdditiveInTheTwist) {
  const AlgebraContext ctx(4);
  for (int k1 = 1; k1 <= 4; ++k1)
    for (int k2 = 1; k2 <= 4; ++k2) {
      const auto got = band_band(make_band(k1, 1, 1, ctx), make_band(k2, 1, 1, ctx), ctx);
      EXPECT_EQ(got, parse_multiset("B(" + std::to_string(ctx.wrap(k1 + k2 - 1)) + ",1,1)", ctx));
    }
}

TEST(TensorRules, StringBand) {
  expect_product(2, "M(1|1,1)", "B(1,2,1)", "2*M(1|1,1)");
  expect_product(2, "M(1|1,1)", "B(2,1,1)", "M(1|2,1)");
  expect_product(3, "W(2|1,2)", "B(3,1,7)", "W(2|2,2)");
  expect_product(3, "B(2,2,-1)", "S(1|1,1)", "2*S(2|1,1)");
  expect_product(2, "B(1,3,2)", "N(1|2,1)", "3*N(1|2,1)");
  expect_product(1, "M(1|1,2)", "B(1,1,5)", "M(1|1,2)");
}

TEST(TensorRules, StringString) {
  expect_product(3, "M(1|1,1)", "M(1|1,1)", "M(1|2,0)");
  expect_product(2, "L(1|2)", "M(2|1,1)", "split(Sl:1,Pr:2)");
}

TEST(TensorRules, StringStringMatchesOracle) {
  for (int n = 1; n <= 3; ++n) {
    const AlgebraContext ctx(n);
    std::vector<Descriptor> ss;
    for (int k = 0; k <= 2; ++k)
      for (auto& d : strings_with_valleys(k, ctx)) ss.push_back(d);
    for (std::size_t a = 0; a < ss.size(); a += n)
      for (std::size_t b = 0; b < ss.size(); b += n)
        EXPECT_EQ(symbolic_tensor(ss[a], ss[b], ctx), oracle(ss[a], ss[b], ctx))
            << n << ": " << to_string(ss[a]) << " (x) " << to_string(ss[b]);
  }
}

TEST(TensorRules, SplitAbsorb) {
  expect_product(1, "L(1|1)", "L(1|1)", "L(1|1)");
  expect_product(2, "L(1|2)", "L(1|1)", "0");
  expect_product(2, "L(1|2)", "L(2|1)", "L(1|1)");
  expect_product(2, "P(1|1)", "P(1|1)", "P(1|1)");
  expect_product(2, "P(1|1)", "P(2|1)", "P(1|1)");
  expect_product(2, "P(1|1)", "P(1|2)", "P(1|2)");
  expect_product(2, "split(Sl:1,Sr:2)", "M(2|1,1)", "split(Sl:1,Pr:2)");
  const AlgebraContext ctx(3);
  Multiset total;
  for (int j = 1; j <= 3; ++j)
    total.add(symbolic_tensor(make_split(ModuleKind::simple, 1, ModuleKind::projective, j, ctx),
                              make_split(ModuleKind::projective, 1, ModuleKind::simple, 2, ctx), ctx));
  EXPECT_EQ(total, parse_multiset("2*split(Sl:1,Sr:2)", ctx));
}

TEST(TensorRules, NamedSummands) {
  for (int n = 1; n <= 4; ++n) {
    const AlgebraContext ctx(n);
    for (int k = 1; k <= 3; ++k)
      for (const auto& f : summand_fixtures(k, ctx))
        EXPECT_TRUE(symbolic_tensor(f.lhs, f.rhs, ctx).contains(f.expected))
            << "n=" << n << " " << to_string(f.lhs) << " (x) " << to_string(f.rhs);
  }
}

TEST(TensorRules, StringSummandBounds) {
  // string summands of a string product: valleys and width bounded by Y,
  // valleys and height bounded by X
  for (int n = 1; n <= 3; ++n) {
    const AlgebraContext ctx(n);
    std::vector<StringDescriptor> ss;
    for (int k = 0; k <= 3; ++k)
      for (auto& d : strings_with_valleys(k, ctx)) ss.push_back(std::get<StringDescriptor>(d));
    for (const auto& x : ss)
      for (const auto& y : ss) {
        const Multiset product = string_string(x, y, ctx);
        for (const auto& [d, c] : product.entries()) {
          if (is_split(d)) continue;
          ASSERT_TRUE(is_string(d)) << to_string(d);
          const auto& s = std::get<StringDescriptor>(d);
          EXPECT_LE(s.valleys, std::min(x.valleys, y.valleys));
          EXPECT_LE(width(s), width(y));
          EXPECT_LE(height(s), height(x));
        }
      }
  }
}

TEST(TensorRules, DimensionIsAdditive) {
  // dim (X (x) Y) from the symbolic answer equals the oracle dimension
  const AlgebraContext ctx(2);
  for (const auto& a : universe(1, 2, {Rational(1), Rational(-1)}, ctx))
    for (const auto& b : universe(1, 2, {Rational(3)}, ctx)) {
      const auto t = tensor(realize(a, ctx), realize(b, ctx));
      EXPECT_EQ(symbolic_tensor(a, b, ctx).total_dimension(ctx), t.total_dimension())
          << to_string(a) << " (x) " << to_string(b);
    }
}

TEST(TensorRules, MismatchedContextThrows) {
  const AlgebraContext ctx(2);
  EXPECT_THROW(symbolic_tensor(make_band(3, 1, 1, AlgebraContext(3)), make_band(1, 1, 1, ctx), ctx),
               std::invalid_argument);
}
