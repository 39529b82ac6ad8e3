#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace weq;
using namespace testing_helpers;

TEST(Enumerate, ConjugacyClass)
{
  const SolutionCatalog c = enumerate_solutions(sys("xz = zy"), {7, 2});
  const Morphism g1 = morph("x=ab; y=ba; z=aba");
  EXPECT_NE(std::find(c.solutions.begin(), c.solutions.end(), g1), c.solutions.end());
  std::vector<LambdaVector> nonerasing;
  for (const auto& k : c.classes)
    if (!k.erasing) nonerasing.push_back(k.normal);
  EXPECT_EQ(nonerasing, (std::vector<LambdaVector>{LambdaVector{1, -1, 0}}));
  for (std::size_t i = 0; i < c.solutions.size(); ++i) {
    EXPECT_TRUE(is_solution(c.solutions[i], sys("xz = zy")));
    EXPECT_EQ(c.ranks[i], rank(c.solutions[i]));
  }
}

TEST(Enumerate, TrivialSystemKeepsEverything)
{
  const SolutionCatalog c = enumerate_solutions(sys("xy = xy"), {3, 2});
  // Morphisms with |h(x)| + |h(y)| <= 3 over two letters.
  std::size_t expect = 0;
  for (std::size_t total = 0; total <= 3; ++total) expect += (total + 1) * (std::size_t{1} << total);
  EXPECT_EQ(c.solutions.size(), expect);
  EXPECT_EQ(c.candidates, expect);
}

TEST(Enumerate, CompleteAgainstIndependentEnumeration)
{
  // Brute force over all pairs of words for xxy = yxx in two unknowns.
  const EqSystem t = sys("xxy = yxx");
  const SolutionCatalog c = enumerate_solutions(t, {6, 2});
  std::set<std::vector<Word>> want;
  for (std::size_t lx = 0; lx <= 6; ++lx)
    for (std::size_t ly = 0; lx + ly <= 6; ++ly)
      for (const auto& a : oracle::all_words(2, lx))
        for (const auto& b : oracle::all_words(2, ly)) {
          Word l = a, r = b;
          l.insert(l.end(), a.begin(), a.end());
          l.insert(l.end(), b.begin(), b.end());
          r.insert(r.end(), a.begin(), a.end());
          r.insert(r.end(), a.begin(), a.end());
          if (l == r) want.insert({a, b});
        }
  std::set<std::vector<Word>> got;
  for (const auto& h : c.solutions) got.insert(h.images());
  EXPECT_EQ(got, want);
}

TEST(Enumerate, CommutationClassesMatchPrimitiveRootOracle)
{
  const SolutionCatalog c = enumerate_solutions(sys("xy = yx"), {8, 2});
  std::set<std::pair<long, long>> got;
  for (const auto& k : c.classes) got.insert({k.normal.entries()[0], k.normal.entries()[1]});
  EXPECT_EQ(got, oracle::commuting_class_normals(8, 2));
}

TEST(Enumerate, DeterministicOrderAndParallelMerge)
{
  const EqSystem t = sys("xyxz = zxyx");
  SearchConfig cfg{7, 2};
  const SolutionCatalog serial = enumerate_solutions(t, cfg);
  cfg.threads = 3;
  const SolutionCatalog parallel = enumerate_solutions(t, cfg);
  EXPECT_EQ(serial.solutions, parallel.solutions);
  EXPECT_EQ(serial.ranks, parallel.ranks);
  ASSERT_EQ(serial.classes.size(), parallel.classes.size());
  for (std::size_t i = 0; i < serial.classes.size(); ++i) {
    EXPECT_EQ(serial.classes[i].normal, parallel.classes[i].normal);
    EXPECT_EQ(serial.classes[i].members, parallel.classes[i].members);
  }
  for (std::size_t i = 1; i < serial.solutions.size(); ++i)
    EXPECT_LE(serial.solutions[i - 1].total_length(), serial.solutions[i].total_length());
}

TEST(Enumerate, NoErasing)
{
  SearchConfig cfg{5, 2};
  cfg.allow_erasing = false;
  const SolutionCatalog c = enumerate_solutions(sys("xz = zy"), cfg);
  for (const auto& h : c.solutions) EXPECT_FALSE(h.erasing());
  EXPECT_EQ(c.erasing_classes(), 0u);
}

TEST(Enumerate, GuardRejectsLargeSearches)
{
  SearchConfig cfg{20, 3};
  cfg.max_candidates = 1000;
  EXPECT_THROW(enumerate_solutions(sys("xy = yx"), cfg), std::length_error);
}

TEST(Enumerate, EveryCatalogSolutionPassesPolynomialCheck)
{
  const EqSystem t = sys("xyxz = zxyx");
  const SolutionCatalog c = enumerate_solutions(t, {7, 2});
  for (const auto& h : c.solutions) EXPECT_TRUE(check_solution_poly(t[0], h));
}

TEST(Enumerate, PrincipalSolutionsShowDefect)
{
  const EqSystem t = sys("xyxz = zxyx");
  const SolutionCatalog c = enumerate_solutions(t, {7, 2});
  for (const auto& h : c.solutions) {
    const Morphism g = principal_decompose(h, t).g;
    EXPECT_EQ(rank(g), g.alphabet().size());
    EXPECT_LE(g.alphabet().size(), 2u);
  }
}

TEST(Enumerate, ClosedUnderLetterPowers)
{
  const EqSystem t = sys("xz = zy");
  const SolutionCatalog c = enumerate_solutions(t, {5, 2});
  for (const auto& h : c.solutions)
    for (std::uint64_t a = 1; a <= 2; ++a)
      for (std::uint64_t b = 1; b <= 2; ++b) EXPECT_TRUE(is_solution(compose(theta_alpha({a, b}), h), t));
}

TEST(VerifyBounds, ClosingExample)
{
  const Equation e1 = eq("xyxz = zxyx"), e2 = eq("xyxxz = zxxyx");
  const BoundVerification v = verify_bounds(e1, e2, {9, 2});
  EXPECT_EQ(v.status, BoundVerification::Status::Verified) << v.message;
  EXPECT_LE(v.classes, 8u);
  EXPECT_TRUE(v.unexplained.empty());
  for (const auto& l : v.class_normals)
    if (l.is_mixed()) EXPECT_EQ(l, (LambdaVector{2, 1, -1}));
}

TEST(VerifyBounds, NotIndependent)
{
  const Equation e = eq("xyxz = zxyx");
  EXPECT_EQ(verify_bounds(e, e).status, BoundVerification::Status::NotIndependent);
  EXPECT_EQ(verify_bounds(e, eq("xy = xy", 3)).status, BoundVerification::Status::NotIndependent);
}

TEST(VerifyBounds, RandomBalancedPairs)
{
  Rng rng(5);
  int verified = 0;
  for (int i = 0; i < 40; ++i) {
    const Equation a = random_balanced_equation(rng, 3, 4), b = random_balanced_equation(rng, 3, 4);
    const BoundVerification v = verify_bounds(a, b, {7, 2});
    EXPECT_NE(v.status, BoundVerification::Status::Violation) << render(a) << " / " << render(b) << ": " << v.message;
    verified += v.status == BoundVerification::Status::Verified;
  }
  EXPECT_GT(verified, 10);
}

TEST(Independence, BoundedWitnesses)
{
  const EqSystem t{eq("xyxz = zxyx"), eq("xyxxz = zxxyx")};
  const auto w = bounded_independence_witnesses(t, {9, 2});
  ASSERT_EQ(w.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    ASSERT_TRUE(w[i].has_value());
    EXPECT_EQ(rank(*w[i]), 2u);
    EXPECT_FALSE(is_solution(*w[i], t[i]));
    EXPECT_TRUE(is_solution(*w[i], t[1 - i]));
  }
}
