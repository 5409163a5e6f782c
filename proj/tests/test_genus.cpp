#include <gtest/gtest.h>

#include <random>

#include "ternary/forms.hpp"
#include "ternary/genus.hpp"

using namespace ternary;

namespace {

UnimodularTransform randomUnimodular(std::mt19937_64& rng) {
  Mat3 m = identity3();
  std::uniform_int_distribution<int> idx(0, 2), coef(-2, 2);
  for (int step = 0; step < 6; ++step) {
    const int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Mat3 e = identity3();
    e[i][j] = coef(rng);
    m = m * e;
  }
  return UnimodularTransform(m);
}

struct Weighted {
  TernaryForm form;
  std::int64_t weight;
};

// Members of a genus listed up to equivalence, each with 48/|Aut| (TG1) or
// 96/|Aut| (TG2).
void expectGenus(const Genus& g, const std::vector<Weighted>& expected, std::int64_t numerator) {
  ASSERT_EQ(g.size(), expected.size());
  for (const auto& w : expected) {
    bool found = false;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (equivalent(g.members[i], w.form)) {
        found = true;
        EXPECT_EQ(numerator / g.autCounts[i], w.weight) << w.form;
        EXPECT_EQ(numerator % g.autCounts[i], 0);
      }
    EXPECT_TRUE(found) << w.form << " missing";
  }
}

std::int64_t twoAdicValuation(std::int64_t n) {
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

}  // namespace

TEST(Genus, JordanSymbolOfSmallForm) {
  // Gram [[2,1,0],[1,2,0],[0,0,6]] diagonalises to 2, 3/2, 6 over Z_3.
  const auto sym = jordanSymbol({1, 1, 3, 0, 0, 1}, 3);
  ASSERT_EQ(sym.size(), 2u);
  EXPECT_EQ(sym[0].scale, 0);
  EXPECT_EQ(sym[0].dim, 1);
  EXPECT_EQ(sym[1].scale, 1);
  EXPECT_EQ(sym[1].dim, 2);
  EXPECT_EQ(sym[0].sign, legendre(2, 3));
  EXPECT_THROW(jordanSymbol({1, 1, 3, 0, 0, 1}, 2), DomainError);
}

TEST(Genus, LocalInvariantsAreClassInvariants) {
  std::mt19937_64 rng(41);
  const std::vector<TernaryForm> forms = {{3, 5, 6, 1, 2, 3}, {7, 11, 20, -8, 4, 6}, {8, 23, 12, 0, 4, 0},
                                          {1, 17, 68, 0, 0, 0}, {5, 7, 34, 0, 0, 2}};
  for (const auto& f : forms) {
    const auto d2 = discriminantForm2(f);
    std::int64_t order = 0;
    for (int e : d2.exponents) order += e;
    EXPECT_EQ(order, twoAdicValuation(2 * f.discriminant())) << f;
    for (int i = 0; i < 10; ++i) {
      const TernaryForm g = applyTransform(f, randomUnimodular(rng));
      EXPECT_TRUE(isometric(d2, discriminantForm2(g))) << f;
      EXPECT_EQ(jordanSymbol(f, 17), jordanSymbol(g, 17));
      EXPECT_TRUE(sameGenus(f, g));
    }
  }
}

TEST(Genus, JordanScalesAddUpToTheDeterminant) {
  for (const auto& f : enumerateClasses(16 * 23 * 23)) {
    int total = 0;
    for (const auto& b : jordanSymbol(f, 23)) total += b.scale * b.dim;
    EXPECT_EQ(total, 2) << f;
  }
}

TEST(Genus, PartitionOf4624) {
  const auto parts = genusPartition(4624);
  EXPECT_EQ(parts.size(), 12u);
  int pairs = 0;
  for (const auto& g : parts) pairs += g.size() == 2;
  EXPECT_EQ(pairs, 3);
  const auto q = qualifyingGenera(17);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].members, tg2(17).members);
}

TEST(Genus, PartitionRefinesEquivalence) {
  std::mt19937_64 rng(43);
  const auto parts = genusPartition(4624);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& f : parts[i].members) {
      EXPECT_EQ(genusOf(applyTransform(f, randomUnimodular(rng))).members, parts[i].members);
      EXPECT_TRUE(sameGenus(f, parts[i].members.front()));
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (j != i) EXPECT_FALSE(sameGenus(f, parts[j].members.front()));
    }
}

TEST(Genus, SquareDiscriminantsFormOneGenus) {
  for (std::int64_t p = 3; p <= 50; p += 2) {
    if (!isPrime(p)) continue;
    EXPECT_EQ(genusPartition(p * p).size(), 1u) << p;
    EXPECT_EQ(tg1(p).members, enumerateClasses(p * p));
  }
}

TEST(Genus, TG1Lists) {
  EXPECT_EQ(tg1(3).members, std::vector<TernaryForm>{reduceForm({1, 1, 3, 0, 0, 1})});
  EXPECT_EQ(tg1(3).weights48(), std::vector<std::int64_t>{2});
  expectGenus(tg1(17), {{{3, 5, 6, 1, 2, 3}, 12}, {{3, 6, 6, -5, 2, 2}, 4}}, 48);
  expectGenus(tg1(23), {{{3, 8, 8, -7, 2, 2}, 4}, {{1, 6, 23, 0, 0, 1}, 6}, {{2, 3, 23, 0, 0, 1}, 12}}, 48);
  EXPECT_THROW(tg1(2), DomainError);
  EXPECT_THROW(tg1(9), DomainError);
}

TEST(Genus, TG2Lists) {
  expectGenus(tg2(17), {{{7, 11, 20, -8, 4, 6}, 24}, {{3, 23, 23, -22, 2, 2}, 8}}, 96);
  expectGenus(tg2(23), {{{3, 31, 31, -30, 2, 2}, 8}, {{4, 23, 24, 0, 4, 0}, 12}, {{8, 23, 12, 0, 4, 0}, 24}}, 96);
  for (std::int64_t p : {17, 23}) EXPECT_EQ(tg2(p).size(), tg1(p).size());
}

TEST(Genus, PrintedCoefficientsForSmallPrimes) {
  expectGenus(tg1(3), {{{1, 1, 3, 0, 0, 1}, 2}}, 48);
  expectGenus(tg2(3), {{{4, 3, 4, 0, 4, 0}, 4}}, 96);
  expectGenus(tg1(5), {{{2, 2, 2, -1, 1, 1}, 4}}, 48);
  expectGenus(tg2(5), {{{8, 3, 7, 2, 8, 4}, 8}}, 96);
  expectGenus(tg1(7), {{{1, 2, 7, 0, 0, 1}, 6}}, 48);
  expectGenus(tg2(7), {{{4, 7, 8, 0, 4, 0}, 12}}, 96);
  expectGenus(tg1(11), {{{3, 4, 4, -3, 2, 2}, 4}, {{1, 3, 11, 0, 0, 1}, 6}}, 48);
  expectGenus(tg2(11), {{{3, 15, 15, -14, 2, 2}, 8}, {{4, 11, 12, 0, 4, 0}, 12}}, 96);
  expectGenus(tg1(13), {{{2, 5, 5, -3, 1, 1}, 12}}, 48);
  expectGenus(tg2(13), {{{8, 7, 15, 2, 8, 4}, 24}}, 96);
  expectGenus(tg1(19), {{{1, 5, 19, 0, 0, 1}, 6}, {{4, 5, 6, 5, 1, 2}, 12}}, 48);
  expectGenus(tg2(19), {{{4, 19, 20, 0, 4, 0}, 12}, {{7, 11, 23, -10, 6, 2}, 24}}, 96);
}

TEST(Genus, SeedsFromDifferentNetsAgree) {
  // p = 5, 29: both the 2 mod 3 and the 5 mod 8 seeds apply; 11, 23: lift and 2 mod 3.
  for (std::int64_t p : {5, 11, 17, 23, 29, 41, 47}) {
    const Genus g = tg2(p);
    if (p % 3 == 2) {
      const std::int64_t m = (4 * p + 1) / 3;
      EXPECT_TRUE(g.contains({3, m, m, 1 - m, 2, 2})) << p;
    }
    if (p % 8 == 5) EXPECT_TRUE(g.contains({8, (p + 1) / 2, p + 2, 2, 8, 4})) << p;
    if (p % 4 == 3) EXPECT_TRUE(g.contains({4, p, p + 1, 0, 4, 0})) << p;
    const auto q = qualifyingGenera(p);
    ASSERT_EQ(q.size(), 1u) << p;
    EXPECT_EQ(q[0].members, g.members) << p;
  }
}

TEST(Genus, BinaryLiftsLandInOneGenus) {
  for (std::int64_t p = 3; p <= 50; p += 4) {
    if (!isPrime(p)) continue;
    const auto classes = binaryClasses(-p);
    const TernaryForm first = liftBinaryToTernary(classes.front(), p);
    for (const auto& b : classes) EXPECT_TRUE(sameGenus(liftBinaryToTernary(b, p), first)) << p;
    EXPECT_TRUE(tg2(p).contains(first));
  }
}

TEST(Genus, TG2OutsideTheSeedNets) {
  EXPECT_FALSE(tg2Seed(73));
  const Genus g = tg2(73);
  EXPECT_EQ(g.size(), tg1(73).size());
  EXPECT_EQ(g.discriminant, 16 * 73 * 73);
}

TEST(Genus, FindH) {
  auto has = [](const std::vector<HPair>& h, const TernaryForm& from, const TernaryForm& to) {
    for (const auto& pr : h)
      if (equivalent(pr.from, from)) return static_cast<bool>(equivalent(pr.to, to));
    return false;
  };
  const auto h23 = findH(23, 500);
  ASSERT_EQ(h23.size(), 3u);
  EXPECT_TRUE(has(h23, {3, 31, 31, -30, 2, 2}, {3, 8, 8, -7, 2, 2}));
  EXPECT_TRUE(has(h23, {4, 23, 24, 0, 4, 0}, {1, 6, 23, 0, 0, 1}));
  EXPECT_TRUE(has(h23, {8, 23, 12, 0, 4, 0}, {2, 3, 23, 0, 0, 1}));
  const auto h17 = findH(17, 500);
  ASSERT_EQ(h17.size(), 2u);
  EXPECT_TRUE(has(h17, {7, 11, 20, -8, 4, 6}, {3, 5, 6, 1, 2, 3}));
  EXPECT_TRUE(has(h17, {3, 23, 23, -22, 2, 2}, {3, 6, 6, -5, 2, 2}));
  EXPECT_THROW(findBijection(tg2(17), tg1(23), 100), SelectionError);
  // TG1 itself represents 1 or 2 mod 4 numbers, so it cannot be the upper genus.
  EXPECT_THROW(findBijection(tg1(17), tg1(17), 100), SelectionError);
}
