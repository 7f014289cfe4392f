#include <gtest/gtest.h>

#include "nakayama/descriptors.hpp"
#include "nakayama/grammar.hpp"
#include "nakayama/universe.hpp"

using namespace nakayama;

namespace {

StringDescriptor str(StringType t, int i, int j, int k, int n) { return make_string(t, i, j, k, AlgebraContext(n)); }

}  // namespace

TEST(Descriptors, WidthHeightValleys) {
  using T = StringType;
  EXPECT_EQ(width(str(T::M, 1, 1, 1, 3)), 3);
  EXPECT_EQ(width(str(T::S, 1, 1, 1, 3)), 2);
  EXPECT_EQ(width(str(T::N, 1, 1, 1, 3)), 3);
  EXPECT_EQ(height(str(T::M, 1, 1, 1, 3)), 3);
  EXPECT_EQ(height(str(T::W, 1, 1, 2, 3)), 3);
  EXPECT_EQ(height(str(T::S, 1, 1, 1, 3)), 3);
  EXPECT_EQ(valleys(Descriptor(str(T::M, 1, 1, 1, 3))), 1);
  EXPECT_EQ(valleys(walk_descriptor({1, 1}, Course::right, 3, AlgebraContext(3))), 1);
  EXPECT_EQ(valleys(walk_descriptor({1, 1}, Course::down, 4, AlgebraContext(3))), 2);
  EXPECT_EQ(valleys(Descriptor(L(1, 1, AlgebraContext(2)))), 0);
  EXPECT_THROW(valleys(Descriptor(make_band(1, 1, 1, AlgebraContext(2)))), std::domain_error);
}

TEST(Descriptors, WidthAndHeightCountWalkColumnsAndRows) {
  const AlgebraContext ctx(3);
  for (int k = 0; k <= 4; ++k)
    for (const auto& d : strings_with_valleys(k, ctx)) {
      const auto& s = std::get<StringDescriptor>(d);
      std::set<long long> rows, cols;
      for (const auto& v : walk_nodes(s)) {
        rows.insert(v.p);
        cols.insert(v.q);
      }
      EXPECT_EQ(static_cast<int>(cols.size()), width(s)) << to_string(d);
      EXPECT_EQ(static_cast<int>(rows.size()), height(s)) << to_string(d);
      EXPECT_EQ(walk_nodes(s).size(), dimension(d, ctx));
      // the walk reads back to the same descriptor
      EXPECT_EQ(walk_descriptor(walk_nodes(s).front(), s.course(), s.length(), ctx), d);
    }
}

TEST(Descriptors, Admissibility) {
  const AlgebraContext ctx(2);
  EXPECT_NO_THROW(make_string(StringType::M, 1, 1, 0, ctx));
  EXPECT_THROW(make_string(StringType::N, 1, 1, 0, ctx), std::invalid_argument);
  EXPECT_THROW(make_string(StringType::W, 1, 1, 0, ctx), std::invalid_argument);
  EXPECT_THROW(make_string(StringType::S, 1, 1, 0, ctx), std::invalid_argument);
  EXPECT_THROW(make_band(1, 1, 0, ctx), std::invalid_argument);
  EXPECT_THROW(make_band(1, 0, 1, ctx), std::invalid_argument);
  // walks of length at most one are k-split
  EXPECT_EQ(walk_descriptor({1, 1}, Course::right, 0, ctx), Descriptor(L(1, 1, ctx)));
  EXPECT_EQ(walk_descriptor({1, 1}, Course::right, 1, ctx), Descriptor(S0(1, 2, ctx)));
  EXPECT_EQ(walk_descriptor({1, 1}, Course::down, 1, ctx), Descriptor(N0(1, 1, ctx)));
}

TEST(Descriptors, Dimensions) {
  EXPECT_EQ(dimension(make_band(1, 1, 1, AlgebraContext(2)), AlgebraContext(2)), 4u);
  EXPECT_EQ(dimension(make_band(1, 3, 2, AlgebraContext(1)), AlgebraContext(1)), 6u);
  EXPECT_EQ(dimension(make_band(2, 2, 1, AlgebraContext(3)), AlgebraContext(3)), 12u);
  EXPECT_EQ(dimension(P(1, 1, AlgebraContext(1)), AlgebraContext(1)), 4u);
  EXPECT_EQ(dimension(S0(1, 1, AlgebraContext(2)), AlgebraContext(2)), 2u);
  EXPECT_EQ(dimension(str(StringType::W, 1, 1, 2, 3), AlgebraContext(3)), 5u);
}

TEST(Descriptors, Twists) {
  const AlgebraContext ctx(3);
  using A = Automorphism;
  EXPECT_EQ(twist(make_band(2, 1, 1, ctx), Side::left, A::theta(1), ctx), Descriptor(make_band(1, 1, 1, ctx)));
  EXPECT_EQ(twist(make_band(2, 2, 3, ctx), Side::left, A::eta(2), ctx),
            Descriptor(make_band(2, 2, Rational(3, 2), ctx)));
  EXPECT_EQ(twist(make_band(2, 2, 3, ctx), Side::right, A::theta(1), ctx), Descriptor(make_band(3, 2, 3, ctx)));
  EXPECT_EQ(twist(make_band(2, 2, 3, ctx), Side::right, A::eta(2), ctx), Descriptor(make_band(2, 2, 6, ctx)));
  EXPECT_EQ(twist(str(StringType::M, 2, 1, 2, 3), Side::left, A::theta(1), ctx),
            Descriptor(str(StringType::M, 1, 1, 2, 3)));
  EXPECT_EQ(twist(str(StringType::W, 2, 1, 1, 3), Side::right, A::theta(2), ctx),
            Descriptor(str(StringType::W, 2, 2, 1, 3)));
  EXPECT_EQ(twist(str(StringType::W, 2, 1, 1, 3), Side::right, A::eta(5), ctx),
            Descriptor(str(StringType::W, 2, 1, 1, 3)));
  EXPECT_EQ(twist(make_split(ModuleKind::simple, 1, ModuleKind::projective, 2, ctx), Side::left, A::theta(1), ctx),
            Descriptor(make_split(ModuleKind::simple, 3, ModuleKind::projective, 2, ctx)));
  EXPECT_THROW(A::eta(0), std::invalid_argument);
}

TEST(Descriptors, TwistsAreInvertible) {
  for (int n = 1; n <= 3; ++n) {
    const AlgebraContext ctx(n);
    for (const auto& d : universe(2, 2, {Rational(1), Rational(-2)}, ctx))
      for (Side side : {Side::left, Side::right}) {
        for (int t = -2; t <= 2; ++t)
          EXPECT_EQ(twist(twist(d, side, Automorphism::theta(t), ctx), side, Automorphism::theta(-t), ctx), d);
        const Rational mu(3, 7);
        EXPECT_EQ(twist(twist(d, side, Automorphism::eta(mu), ctx), side, Automorphism::eta(mu.inverse()), ctx), d);
      }
  }
}

TEST(Grammar, RoundTrip) {
  for (int n = 1; n <= 3; ++n) {
    const AlgebraContext ctx(n);
    for (const auto& d : universe(3, 3, {Rational(1), Rational(-1), Rational(1, 2), Rational(-7, 3)}, ctx)) {
      const std::string text = to_string(d);
      EXPECT_EQ(parse_descriptor(text, ctx), d) << text;
      EXPECT_EQ(to_string(parse_descriptor(text, ctx)), text);
    }
  }
}

TEST(Grammar, ShorthandsAndCanonicalForms) {
  const AlgebraContext ctx(3);
  EXPECT_EQ(parse_descriptor("L(1|2)", ctx), Descriptor(L(1, 2, ctx)));
  EXPECT_EQ(to_string(parse_descriptor("L(1|2)", ctx)), "split(Sl:1,Sr:2)");
  EXPECT_EQ(to_string(parse_descriptor("P(1|1)", ctx)), "split(Pl:1,Pr:1)");
  EXPECT_EQ(to_string(parse_descriptor("S0(2|3)", ctx)), "split(Sl:2,Pr:3)");
  EXPECT_EQ(to_string(parse_descriptor("N0(2|3)", ctx)), "split(Pl:2,Sr:3)");
  EXPECT_EQ(to_string(parse_descriptor(" M( 4 | 0 , 1 ) ", ctx)), "M(1|3,1)");
  EXPECT_EQ(to_string(parse_descriptor("B(4,2,6/4)", ctx)), "B(1,2,3/2)");
  EXPECT_EQ(to_string(parse_descriptor("B(1,1,-2)", ctx)), "B(1,1,-2)");
  // n = 1 also accepts the label 0
  EXPECT_EQ(parse_descriptor("M(0|0,1)", AlgebraContext(1)), parse_descriptor("M(1|1,1)", AlgebraContext(1)));
}

TEST(Grammar, Errors) {
  const AlgebraContext ctx(2);
  for (const char* bad : {"", "M(1|1)", "Q(1|1,1)", "M(1|1,1", "N(1|1,0)", "B(1,1,0)", "B(1,0,1)", "M(1|1,1) x",
                          "split(Sl:1)", "B(1,1,1/0)"})
    EXPECT_THROW(parse_descriptor(bad, ctx), std::invalid_argument) << bad;
  try {
    parse_descriptor("M(1|x,1)", ctx);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Grammar, Multisets) {
  const AlgebraContext ctx(2);
  Multiset m;
  EXPECT_EQ(to_string(m), "0");
  m.add(make_band(1, 4, 1, ctx));
  m.add(make_band(1, 2, 1, ctx));
  m.add(L(1, 1, ctx), 2);
  m.add(make_string(StringType::M, 1, 2, 0, ctx));
  EXPECT_EQ(to_string(m), "M(1|2,0) + 2*split(Sl:1,Sr:1) + B(1,2,1) + B(1,4,1)");
  EXPECT_EQ(parse_multiset(to_string(m), ctx), m);
  EXPECT_EQ(parse_multiset("0", ctx), Multiset());
  EXPECT_EQ(m.size(), 5);
  EXPECT_EQ(m.total_dimension(ctx), 3u + 2u + 8u + 16u);
}
