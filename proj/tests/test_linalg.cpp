#include <gtest/gtest.h>

#include <random>

#include "nakayama/linalg.hpp"

using namespace nakayama;
using namespace nakayama::linalg;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int density = 60) {
  std::uniform_int_distribution<int> val(-3, 3), den(1, 3), pct(0, 99);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (pct(rng) < density) m(i, j) = Rational(val(rng), den(rng));
  return m;
}

}  // namespace

TEST(Rational, ArithmeticAndPrinting) {
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(-6, 3).str(), "-2");
  EXPECT_EQ(Rational(3, -9).str(), "-1/3");
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_EQ(Rational::parse(" -3/6 "), Rational(-1, 2));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, OverflowPromotesAndDemotes) {
  Rational big(std::numeric_limits<long long>::max());
  Rational sq = big * big;
  EXPECT_EQ(sq.str(), mpz_class(mpz_class("9223372036854775807") * mpz_class("9223372036854775807")).get_str());
  EXPECT_EQ(sq / big, big);
  EXPECT_EQ((big + 1) - 1, big);
  EXPECT_EQ(Rational(std::numeric_limits<long long>::min()).str(), "-9223372036854775808");
  Rational tiny(1, std::numeric_limits<long long>::max());
  EXPECT_EQ((tiny * tiny) * big * big, Rational(1));
}

TEST(Linalg, CokernelOfZeroIsIdentity) {
  auto c = cokernel(Matrix(3, 2));
  EXPECT_EQ(c.dimension, 3u);
  EXPECT_EQ(c.projection, Matrix::identity(3));
}

TEST(Linalg, CokernelOfIdentityIsEmpty) {
  auto c = cokernel(Matrix::identity(3));
  EXPECT_EQ(c.dimension, 0u);
  EXPECT_EQ(c.projection.rows(), 0u);
  EXPECT_EQ(c.projection.cols(), 3u);
}

TEST(Linalg, CokernelContract) {
  Matrix f{{1}, {2}};
  auto c = cokernel(f);
  EXPECT_EQ(c.dimension, 1u);
  EXPECT_EQ(rank(c.projection), 1u);
  EXPECT_TRUE((c.projection * f).is_zero());
  EXPECT_EQ(c.projection * c.section, Matrix::identity(1));
}

TEST(Linalg, FittingExamples) {
  Matrix nil{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  auto a = fitting_split(nil);
  EXPECT_EQ(a.kernel_basis.cols(), 3u);
  EXPECT_EQ(a.image_basis.cols(), 0u);
  Matrix inv{{2, 1}, {0, 3}};
  auto b = fitting_split(inv);
  EXPECT_EQ(b.kernel_basis.cols(), 0u);
  EXPECT_EQ(b.image_basis.cols(), 2u);
  Matrix mixed = direct_sum(jordan_cell(2, 0), jordan_cell(1, 1));
  auto c = fitting_split(mixed);
  EXPECT_EQ(c.kernel_basis.cols(), 2u);
  EXPECT_EQ(c.image_basis.cols(), 1u);
}

TEST(Linalg, RandomRankNullity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    Matrix m = random_matrix(rng, r, c, 20 + static_cast<int>(rng() % 70));
    Matrix k = kernel(m);
    EXPECT_EQ(rank(m) + k.cols(), c);
    EXPECT_TRUE((m * k).is_zero());
    auto q = cokernel(m);
    EXPECT_EQ(q.dimension, r - rank(m));
    EXPECT_TRUE((q.projection * m).is_zero());
    EXPECT_EQ(q.projection * q.section, Matrix::identity(q.dimension));
    EXPECT_EQ(image(m).cols(), rank(m));
  }
}

TEST(Linalg, RandomFittingComplementaryAndInvariant) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    Matrix f = random_matrix(rng, n, n, 30);
    auto s = fitting_split(f);
    EXPECT_EQ(s.kernel_basis.cols() + s.image_basis.cols(), n);
    EXPECT_EQ(rank(hstack(s.kernel_basis, s.image_basis)), n);
    EXPECT_EQ(rank(hstack(s.kernel_basis, f * s.kernel_basis)), s.kernel_basis.cols());
    EXPECT_EQ(rank(hstack(s.image_basis, f * s.image_basis)), s.image_basis.cols());
  }
}

TEST(Linalg, SolveAndInverse) {
  Matrix a{{1, 2}, {3, 4}};
  Matrix ai = inverse(a);
  EXPECT_EQ(a * ai, Matrix::identity(2));
  EXPECT_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Matrix{{1}, {2}}).has_value());
  EXPECT_THROW(inverse(Matrix{{1, 1}, {1, 1}}), std::domain_error);
}

TEST(Linalg, SparseSystemMatchesDense) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    Matrix m = random_matrix(rng, r, c, 35);
    SparseSystem sys(c);
    for (std::size_t i = 0; i < r; ++i) {
      SparseSystem::Row row;
      for (std::size_t j = 0; j < c; ++j)
        if (!m(i, j).is_zero()) row.emplace_back(j, m(i, j));
      sys.add(row);
    }
    Matrix k = sys.nullspace();
    EXPECT_EQ(k.cols(), kernel(m).cols());
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());
  }
}

TEST(Linalg, Kron) {
  Matrix a{{1, 2}};
  Matrix b{{0}, {1}};
  Matrix k = kron(a, b);
  EXPECT_EQ(k, (Matrix{{0, 0}, {1, 2}}));
}

TEST(Linalg, RationalRoots) {
  // (x - 1/2)^2 (x + 3) (x^2 - 2)
  Polynomial p{Rational(1)};
  const auto mul = [](const Polynomial& a, const Polynomial& b) {
    Polynomial c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  p = mul(p, {Rational(-1, 2), 1});
  p = mul(p, {Rational(-1, 2), 1});
  p = mul(p, {3, 1});
  p = mul(p, {-2, 0, 1});
  auto r = rational_roots(p);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], Rational(-3));
  EXPECT_EQ(r[1], Rational(1, 2));
  EXPECT_TRUE(rational_roots({1, 0, 1}).empty());
  auto big = rational_roots({Rational(-1000003), 7});
  ASSERT_EQ(big.size(), 1u);
  EXPECT_EQ(big[0], Rational(1000003, 7));
  auto z = rational_roots({0, 0, 5});
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0], Rational(0));
}
