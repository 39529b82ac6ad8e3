#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace weq;
using namespace testing_helpers;

namespace {

Morphism conj(unsigned i)
{
  Word z;
  for (unsigned k = 0; k < i; ++k) z.insert(z.end(), {0, 1});
  z.push_back(0);
  return Morphism({{0, 1}, {1, 0}, z}, 2);
}

} // namespace

TEST(Apply, ConcatenatesImages)
{
  const Morphism h = morph("x=ab; y=ba; z=aba");
  EXPECT_EQ(weq::apply(h, Word{0, 2}), (Word{0, 1, 0, 1, 0}));
  EXPECT_TRUE(weq::apply(h, Word{}).empty());
  EXPECT_EQ(weq::apply(morph("x=aa; y=aa"), Word{0, 1}), (Word{0, 0, 0, 0}));
}

TEST(Apply, RejectsUnknownOutOfRange)
{
  const Morphism h = morph("x=a; y=b");
  EXPECT_THROW(weq::apply(h, Word{0, 2}), std::out_of_range);
}

TEST(Construction, ValidatesLetters)
{
  EXPECT_THROW(Equation({0, 3}, {0}, 3), std::out_of_range);
  EXPECT_THROW(Morphism({{0, 2}}, 2), std::out_of_range);
  EXPECT_THROW(EqSystem(std::vector<Equation>{}), std::invalid_argument);
  EXPECT_THROW((EqSystem{Equation({0}, {0}, 1), Equation({0}, {1}, 2)}), std::invalid_argument);
}

TEST(IsSolution, ConjugacyExamples)
{
  const EqSystem t = sys("xz = zy");
  EXPECT_TRUE(is_solution(morph("x=ab; y=ba; z=aba"), t));
  EXPECT_FALSE(is_solution(morph("x=a; y=b; z=a"), t));
  EXPECT_TRUE(is_solution(morph("x=abc; y=c"), sys("xy = xy")));
  EXPECT_THROW(is_solution(morph("x=a; y=b"), t), std::invalid_argument);
}

TEST(GammaMatrix, LetterCounts)
{
  const GammaMatrix g = gamma_matrix(morph("x=ab; y=ba; z=aba"));
  ASSERT_EQ(g.rows.size(), 2u);
  EXPECT_EQ(g.rows[0], (std::vector<std::uint64_t>{1, 1, 2}));
  EXPECT_EQ(g.rows[1], (std::vector<std::uint64_t>{1, 1, 1}));

  const GammaMatrix zero = gamma_matrix(Morphism({{}, {}, {}}, 2));
  for (const auto& r : zero.rows) EXPECT_EQ(r, (std::vector<std::uint64_t>{0, 0, 0}));

  const GammaMatrix single = gamma_matrix(morph("x=aa"));
  ASSERT_EQ(single.rows.size(), 1u);
  EXPECT_EQ(single.rows[0], (std::vector<std::uint64_t>{2}));
}

TEST(Rank, Examples)
{
  EXPECT_EQ(rank(morph("x=ab; y=ba; z=aba")), 2u);
  EXPECT_EQ(rank(Morphism({{}, {}, {}}, 2)), 0u);
  EXPECT_EQ(rank(Morphism::identity(3)), 3u);
}

TEST(Rank, AgreesWithRationalElimination)
{
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = detail::uniform(rng, 1, 5);
    const std::size_t k = detail::uniform(rng, 1, 4);
    const Morphism h = random_morphism(rng, n, k, 6);
    EXPECT_EQ(rank(h), oracle::rational_rank(oracle::parikh_rows(h))) << render_inline(h);
  }
}

TEST(Determinant, BareissMatchesCofactorExpansion)
{
  const IntMatrix m = {{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
  // 2(3-2) - 0 + 1(1-3) = 0
  EXPECT_EQ(determinant(m), 0);
  const IntMatrix m2 = {{0, 1}, {1, 0}};
  EXPECT_EQ(determinant(m2), -1);
  const IntMatrix m3 = {{4, 3, 2}, {1, 5, 7}, {2, 8, 6}};
  // 4(30-56) - 3(6-14) + 2(8-10) = -104 + 24 - 4
  EXPECT_EQ(determinant(m3), -84);
}

TEST(LinearEquivalence, Examples)
{
  EXPECT_TRUE(linear_equivalent(conj(1), conj(2)));
  const Morphism h = morph("x=a; y=a; z=a");
  EXPECT_TRUE(linear_equivalent(h, h));
  EXPECT_FALSE(linear_equivalent(h, morph("x=a; y=aa; z=a")));
  EXPECT_THROW(linear_equivalent(h, morph("x=a; y=a")), std::invalid_argument);
}

TEST(LinearEquivalence, IsAnEquivalenceRelation)
{
  Rng rng(11);
  std::vector<Morphism> pool;
  for (int i = 0; i < 40; ++i) pool.push_back(random_morphism(rng, 3, 2, 3));
  for (const auto& a : pool) {
    EXPECT_TRUE(linear_equivalent(a, a));
    for (const auto& b : pool) {
      EXPECT_EQ(linear_equivalent(a, b), linear_equivalent(b, a));
      if (!linear_equivalent(a, b)) continue;
      for (const auto& c : pool)
        if (linear_equivalent(b, c)) EXPECT_TRUE(linear_equivalent(a, c));
    }
  }
}

TEST(GammaNormal, Examples)
{
  EXPECT_EQ(gamma_normal(morph("x=ab; y=ba; z=aba")), (LambdaVector{1, -1, 0}));
  // A solution on 2|x| + |y| = |z|: x = a, y = b, z = aab.
  EXPECT_EQ(gamma_normal(morph("x=a; y=b; z=aab")), (LambdaVector{2, 1, -1}));
  EXPECT_EQ(gamma_normal(morph("x=a; y=a")), (LambdaVector{1, -1}));
}

TEST(GammaNormal, RejectsWrongRank)
{
  EXPECT_THROW(gamma_normal(Morphism::identity(3)), std::invalid_argument);
  EXPECT_THROW(gamma_normal(morph("x=a; y=a; z=a")), std::invalid_argument);
}

TEST(GammaNormal, AnnihilatesLetterPowers)
{
  const Morphism h = morph("x=ab; y=ba; z=aba");
  const LambdaVector l = gamma_normal(h);
  for (std::uint64_t a = 1; a <= 4; ++a)
    for (std::uint64_t b = 1; b <= 4; ++b) EXPECT_EQ(l.dot(compose(theta_alpha({a, b}), h).length_type()), 0);
}

TEST(ThetaAlpha, Examples)
{
  EXPECT_EQ(theta_alpha({1, 1, 1}), Morphism::identity(3));
  EXPECT_EQ(compose(theta_alpha({2, 3}), morph("x=ab")), morph("x=aabbb"));
  EXPECT_EQ(compose(theta_alpha({2, 1}), morph("x=ab; y=ba; z=aba")).length_type(), (LengthType{3, 3, 5}));
}

TEST(ThetaAlpha, PreservesSolutionsAndRank)
{
  Rng rng(3);
  const EqSystem t = sys("xz = zy");
  for (unsigned i = 0; i < 5; ++i) {
    const Morphism g = conj(i);
    for (int rep = 0; rep < 10; ++rep) {
      const std::vector<std::uint64_t> alpha = {detail::uniform(rng, 1, 4), detail::uniform(rng, 1, 4)};
      const Morphism h = compose(theta_alpha(alpha), g);
      EXPECT_TRUE(is_solution(h, t));
      EXPECT_EQ(rank(h), rank(g));
    }
  }
}

TEST(LambdaVector, Normalization)
{
  EXPECT_EQ(LambdaVector({-4, 2, 0}).entries(), (std::vector<std::int64_t>{2, -1, 0}));
  EXPECT_EQ(LambdaVector({0, -3}).entries(), (std::vector<std::int64_t>{0, 1}));
  EXPECT_THROW(LambdaVector({0, 0}), std::invalid_argument);
  const LambdaVector l{2, 1, -1};
  EXPECT_EQ(l.positive(), (Exponent{2, 1, 0}));
  EXPECT_EQ(l.negative(), (Exponent{0, 0, 1}));
  EXPECT_TRUE(l.is_mixed());
  EXPECT_FALSE((LambdaVector{0, 1}).is_mixed());
}

TEST(Renaming, CanonicalFirstUse)
{
  const auto [canon, to_old] = canonical_renaming(morph("x=ba; y=cb"));
  EXPECT_EQ(canon, Morphism({{0, 1}, {2, 0}}, 3));
  EXPECT_EQ(to_old, (std::vector<Letter>{1, 0, 2}));
  EXPECT_TRUE(renaming_equivalent(morph("x=ab; y=b"), morph("x=ba; y=a")));
  EXPECT_FALSE(renaming_equivalent(morph("x=ab; y=b"), morph("x=ab; y=a")));
  EXPECT_TRUE(morph("x=b; y=a").is_renaming());
  EXPECT_FALSE(morph("x=a; y=a").is_renaming());
}

TEST(Compose, Associative)
{
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Morphism h = random_morphism(rng, 3, 2, 3);
    const Morphism g = random_morphism(rng, 2, 2, 3);
    const Morphism f = random_morphism(rng, 2, 3, 2);
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
  }
}
