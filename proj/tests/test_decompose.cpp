#include <gtest/gtest.h>

#include "nakayama/decompose.hpp"
#include "nakayama/grammar.hpp"
#include "nakayama/realize.hpp"
#include "nakayama/tensor_oracle.hpp"
#include "nakayama/universe.hpp"

using namespace nakayama;

namespace {

ConcreteBimodule R(const std::string& text, const AlgebraContext& ctx) { return realize(parse_descriptor(text, ctx), ctx); }

}  // namespace

TEST(Decompose, Simple) {
  const AlgebraContext ctx(2);
  const auto rep = decompose(R("L(1|1)", ctx), ctx);
  ASSERT_EQ(rep.summands.size(), 1u);
  EXPECT_EQ(rep.summands[0].module, R("L(1|1)", ctx));
  EXPECT_EQ(rep.flags, (std::vector<std::string>{"indecomposable"}));
}

TEST(Decompose, DirectSumOfSimples) {
  const AlgebraContext ctx(2);
  const auto rep = decompose(direct_sum(R("L(1|1)", ctx), R("L(1|2)", ctx)), ctx);
  EXPECT_EQ(rep.summands.size(), 2u);
  EXPECT_EQ(rep.multiset, parse_multiset("L(1|1) + L(1|2)", ctx));
}

TEST(Decompose, BandSquare) {
  const AlgebraContext ctx(2);
  const auto rep = decompose(tensor(R("B(1,2,1)", ctx), R("B(1,2,1)", ctx)), ctx);
  std::vector<std::size_t> dims;
  for (const auto& s : rep.summands) dims.push_back(s.module.total_dimension());
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::size_t>{4, 12}));
  EXPECT_EQ(rep.multiset, parse_multiset("B(1,1,1) + B(1,3,1)", ctx));
}

TEST(Decompose, MixedSumWithRepeatedSummands) {
  const AlgebraContext ctx(1);
  const Multiset m = parse_multiset("M(1|1,1) + 2*B(1,2,-1) + B(1,2,2) + S(1|1,1) + 2*P(1|1) + N0(1|1)", ctx);
  for (std::uint64_t seed : {0, 1, 2}) {
    const auto rep = decompose(realize(m, ctx), ctx, seed);
    EXPECT_TRUE(fully_identified(rep));
    EXPECT_EQ(rep.multiset, m) << to_string(rep.multiset);
    std::size_t total = 0;
    for (const auto& s : rep.summands) total += s.module.total_dimension();
    EXPECT_EQ(total, rep.input_dimension);
  }
}

TEST(Decompose, IdentifyRoundTrip) {
  for (int n = 1; n <= 3; ++n) {
    const AlgebraContext ctx(n);
    for (const auto& d : universe(3, 3, {Rational(1), Rational(2), Rational(-1), Rational(1, 2)}, ctx))
      EXPECT_EQ(identify(realize(d, ctx), ctx), d) << to_string(d);
  }
}

TEST(Decompose, IdentifyUnderChangeOfBasis) {
  // a random change of basis at every vertex
  const AlgebraContext ctx(2);
  std::mt19937_64 rng(7);
  for (const char* text : {"B(2,3,-1/2)", "W(1|2,2)", "P(2|1)", "M(2|2,1)"}) {
    const auto x = R(text, ctx);
    ConcreteBimodule y = x;
    std::vector<Matrix> g(x.vertex_count());
    for (std::size_t v = 0; v < g.size(); ++v) {
      do {
        g[v] = Matrix(x.dim_at(v), x.dim_at(v));
        for (std::size_t r = 0; r < g[v].rows(); ++r)
          for (std::size_t c = 0; c < g[v].cols(); ++c) g[v](r, c) = random_coefficients(rng, 1)[0];
      } while (!linalg::invertible(g[v]));
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
      y.vmap_at(v) = g[x.up(v)] * x.vmap_at(v) * linalg::inverse(g[v]);
      y.hmap_at(v) = g[x.left(v)] * x.hmap_at(v) * linalg::inverse(g[v]);
    }
    ASSERT_TRUE(validate(y).ok);
    EXPECT_EQ(identify(y, ctx), parse_descriptor(text, ctx)) << text;
  }
}

TEST(Decompose, UnrecognizedInput) {
  const AlgebraContext ctx(2);
  EXPECT_THROW(identify(direct_sum(R("L(1|1)", ctx), R("L(1|2)", ctx)), ctx), Unrecognized);
}

TEST(Decompose, Isomorphism) {
  const AlgebraContext ctx(2);
  const auto x = R("M(1|1,1)", ctx);
  EXPECT_EQ(isomorphic(x, x), Iso::yes);
  EXPECT_EQ(isomorphic(R("L(1|1)", ctx), R("L(1|2)", ctx)), Iso::no);
  EXPECT_EQ(isomorphic(R("B(1,1,2)", ctx), R("B(1,1,3)", ctx)), Iso::no);
  EXPECT_EQ(isomorphic(R("B(1,2,2)", ctx), R("B(1,2,3)", ctx)), Iso::no);
  EXPECT_EQ(isomorphic(R("M(1|2,0)", ctx), R("N0(1|1)", ctx)), Iso::no);
  // equal grids, different modules
  const AlgebraContext one(1);
  EXPECT_EQ(isomorphic(R("S0(1|1)", one), R("N0(1|1)", one)), Iso::no);
  EXPECT_EQ(isomorphic(R("B(1,1,1)", one), realize(parse_multiset("L(1|1) + L(1|1)", one), one)), Iso::no);
}

TEST(Decompose, BandCycleTraces) {
  // trace of the cycle operator is m * lambda
  for (int n = 1; n <= 3; ++n) {
    const AlgebraContext ctx(n);
    for (int m = 1; m <= 3; ++m)
      for (const Rational& l : {Rational(1), Rational(-1), Rational(2, 3)})
        for (int k = 1; k <= n; ++k) {
          const auto r = band_cycle_operator(realize(make_band(k, m, l, ctx), ctx), k, ctx);
          ASSERT_TRUE(r.has_value());
          EXPECT_EQ(r->trace(), Rational(m) * l);
        }
  }
}

TEST(Decompose, TwistsOfRealizationsMatchDescriptorTwists) {
  for (int n = 1; n <= 3; ++n) {
    const AlgebraContext ctx(n);
    for (const auto& d : universe(2, 2, {Rational(1), Rational(3)}, ctx))
      for (Side side : {Side::left, Side::right})
        for (const auto& aut : {Automorphism::theta(1), Automorphism::theta(-1), Automorphism::eta(Rational(2)),
                                Automorphism::eta(Rational(-1, 3))}) {
          const auto expected = twist(d, side, aut, ctx);
          EXPECT_EQ(identify(twist(realize(d, ctx), side, aut), ctx), expected)
              << to_string(d) << (side == Side::left ? " left" : " right");
        }
  }
}

TEST(Decompose, SeedIndependence) {
  const AlgebraContext ctx(2);
  const auto t = tensor(R("W(1|1,2)", ctx), R("M(1|1,2)", ctx));
  const auto first = decompose(t, ctx, 0).multiset;
  for (std::uint64_t seed = 1; seed < 10; ++seed) EXPECT_EQ(decompose(t, ctx, seed).multiset, first);
}

TEST(Decompose, ReportJson) {
  const AlgebraContext ctx(2);
  const auto x = realize(parse_multiset("B(1,1,1) + L(2|2)", ctx), ctx);
  const auto j = to_json(decompose(x, ctx, 3), ctx);
  EXPECT_EQ(j["multiset"], "split(Sl:2,Sr:2) + B(1,1,1)");
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["input_dimension"], 5);
  EXPECT_EQ(j["input_hash"].get<std::string>().size(), 16u);
  EXPECT_EQ(j["summands"].size(), 2u);
}
