#include <gtest/gtest.h>

#include <random>

#include "ternary/kernels.hpp"
#include "ternary/lattice.hpp"

using namespace ternary;

namespace {

std::int64_t bruteCount(const TernaryForm& f, std::int64_t n, int box) {
  std::int64_t count = 0;
  for (int x = -box; x <= box; ++x)
    for (int y = -box; y <= box; ++y)
      for (int z = -box; z <= box; ++z)
        if (f(x, y, z) == n) ++count;
  return count;
}

TernaryForm randomPositiveForm(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> diag(1, 9), off(-6, 6);
  while (true) {
    const TernaryForm f{diag(rng), diag(rng), diag(rng), off(rng), off(rng), off(rng)};
    if (f.isPositiveDefinite()) return f;
  }
}

}  // namespace

TEST(Lattice, RepresentationCounts) {
  const TernaryForm sq{1, 1, 1, 0, 0, 0};
  EXPECT_EQ(bruteCount(sq, 2, 2), 12);
  EXPECT_EQ(repCountTernary(sq, 2), 12);
  const TernaryForm h{2, 2, 2, -1, 1, 1};
  EXPECT_EQ(bruteCount(h, 2, 3), 6);
  EXPECT_EQ(repCountTernary(h, 2), 6);
  EXPECT_EQ(repCountTernary(sq, 0), 1);
  EXPECT_EQ(repCountTernary(sq, -3), 0);
  EXPECT_EQ(repCountTernary(sq, 1, 2), 0);
  EXPECT_EQ(repCountTernary(sq, 4, 2), 12);
  EXPECT_THROW(repCountTernary(TernaryForm{1, 1, -3, 0, 0, 0}, 5), DomainError);
}

TEST(Lattice, ThetaOfSumOfSquaresIsPhiCubed) {
  EXPECT_EQ(thetaSeriesTernary({1, 1, 1, 0, 0, 0}, 500), pow(phi(500), 3));
}

TEST(Lattice, ThetaSeriesExamples) {
  const QSeries g = thetaSeriesTernary({1, 1, 3, 0, 0, 1}, 60);
  EXPECT_EQ(g[0], 1);
  EXPECT_EQ(g[1], 6);
  const QSeries t = thetaSeriesTernary({8, 3, 7, 2, 8, 4}, 500);
  for (int n = 0; n <= 500; ++n)
    if (n % 4 == 1 || n % 4 == 2) EXPECT_EQ(t[n], 0) << n;
  for (int n = 0; n <= 60; ++n) EXPECT_EQ(g[n], bruteCount({1, 1, 3, 0, 0, 1}, n, 12)) << n;
}

TEST(Lattice, AbstractCountsAreRepCounts) {
  const TernaryForm h{2, 2, 2, -1, 1, 1}, g{1, 1, 3, 0, 0, 1};
  const QSeries th = thetaSeriesTernary(h, 80), tg = thetaSeriesTernary(g, 80);
  for (int n = 0; n <= 80; ++n) {
    EXPECT_EQ(th[n], repCountTernary(h, n));
    EXPECT_EQ(tg[n], repCountTernary(g, n));
  }
}

TEST(Lattice, SweepMatchesBruteForceBox) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const TernaryForm f = randomPositiveForm(rng);
    const int n = 1 + static_cast<int>(rng() % 200);
    EXPECT_EQ(kernels::thetaSweep(f, n), kernels::thetaSweepSerial(f, n)) << f;
  }
}

TEST(Lattice, DoublingTheBoxChangesNothing) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const TernaryForm f = randomPositiveForm(rng);
    const QSeries th = thetaSeriesTernary(f, 200);
    // Generous box: every coordinate of a point with F <= 200 is at most
    // sqrt(2*200*minor/det); use twice the crude bound sqrt(200 * 8) = 40.
    std::vector<QSeries::Coeff> counts(201, 0);
    for (int x = -80; x <= 80; ++x)
      for (int y = -80; y <= 80; ++y)
        for (int z = -80; z <= 80; ++z) {
          const std::int64_t v = f(x, y, z);
          if (v <= 200) ++counts[v];
        }
    EXPECT_EQ(th, QSeries(counts)) << f;
  }
}

TEST(Lattice, BinaryThetaSeries) {
  const QSeries a = thetaSeriesBinary({1, 1, 1}, 20);
  EXPECT_EQ(a.truncated(4), QSeries({1, 6, 0, 6, 6}));
  for (int n = 0; n <= 20; ++n) {
    std::int64_t count = 0;
    for (int m = -10; m <= 10; ++m)
      for (int k = -10; k <= 10; ++k)
        if (m * m + m * k + k * k == n) ++count;
    EXPECT_EQ(a[n], count) << n;
  }
  EXPECT_EQ(thetaSeriesBinary({2, 2, 3}, 10)[2], 2);
  EXPECT_THROW(thetaSeriesBinary({1, 3, 1}, 10), DomainError);
}

TEST(Lattice, AffineBinaryTheta) {
  // 20u^2 + 10u + 10v^2: brute force over a box.
  const BinaryFormExt f{20, 0, 10, 10, 0, 0};
  const QSeries t = thetaSeriesBinary(f, 300);
  std::vector<QSeries::Coeff> counts(301, 0);
  for (int u = -20; u <= 20; ++u)
    for (int v = -20; v <= 20; ++v) {
      const std::int64_t e = f(u, v);
      if (e >= 0 && e <= 300) ++counts[e];
    }
  EXPECT_EQ(t, QSeries(counts));
  // m^2 - 4m reaches -4 at m = 2.
  EXPECT_THROW(thetaSeriesBinary({1, 0, 1, -4, 0, 0}, 30), DomainError);
}

TEST(Lattice, ConstrainedTheta) {
  const int n = 300;
  const TernaryForm t{2, 2, 2, -1, 1, 1};
  auto x = [&](int r) {
    // y = -z = r mod 4, x free
    return Constraint::fromPredicate(4, 3, [r](const std::vector<int>& v) {
      return v[1] == r && (v[2] + r) % 4 == 0;
    });
  };
  const QSeries lhs = add(constrainedTheta(t, x(0), n), constrainedTheta(t, x(2), n));
  EXPECT_EQ(lhs, mul(phi(n, 2), mul(phi(n, 10), phi(n, 20))));

  const auto oddSum = Constraint::fromPredicate(2, 2, [](const std::vector<int>& v) { return v[0] != v[1]; });
  const QSeries mixed = constrainedTheta(BinaryFormExt{1, 0, 3}, oddSum, n);
  EXPECT_EQ(mixed, scale(mul(QSeries::monomial(1, n), mul(psi(n, 2), psi(n, 6))), 2));

  const auto all = Constraint::fromPredicate(3, 3, [](const std::vector<int>&) { return true; });
  EXPECT_EQ(constrainedTheta(t, all, n), thetaSeriesTernary(t, n));
  EXPECT_THROW(constrainedTheta(t, oddSum, n), DomainError);
  EXPECT_THROW(constrainedTheta(BinaryFormExt{1, 0, 3}, all, n), DomainError);
  EXPECT_THROW(Constraint(4, 2, {{0, 4}}), DomainError);
}

TEST(Lattice, SumOfThreeSquares) {
  EXPECT_EQ(sOfN(1), 6);
  EXPECT_EQ(sOfN(9), 30);
  EXPECT_EQ(sOfN(25), 30);
  EXPECT_EQ(sOfN(0), 1);
  EXPECT_EQ(sOfN(7), 0);
  EXPECT_EQ(sOfN(-1), 0);
  EXPECT_EQ(sOfN(1, 2), 0);
  const SumOfThreeSquares table(2000);
  const QSeries cube = pow(phi(2000), 3);
  for (int n = 0; n <= 2000; ++n) EXPECT_EQ(table(n), cube[n]) << n;
  for (int n : {0, 1, 50, 999, 1234}) EXPECT_EQ(table(n), sOfN(n));
  EXPECT_THROW(table(2001), DomainError);
}
