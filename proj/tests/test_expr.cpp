#include <gtest/gtest.h>

#include <thread>

#include "ternary/expr.hpp"
#include "ternary/forms.hpp"
#include "ternary/genus.hpp"

using namespace ternary;

namespace {

std::int64_t bruteThreeSquares(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t x = -40; x <= 40; ++x)
    for (std::int64_t y = -40; y <= 40; ++y)
      for (std::int64_t z = -40; z <= 40; ++z) count += x * x + y * y + z * z == n;
  return count;
}

}  // namespace

TEST(Expr, LeavesMatchTheirConstructors) {
  Evaluator ev;
  EXPECT_EQ(ev.eval(Expr::phi(3), 100), dilate(phi(100), 3));
  EXPECT_EQ(ev.eval(Expr::psi(2), 100), dilate(psi(100), 2));
  EXPECT_EQ(ev.eval(Expr::thetaF(1, 1), 100), phi(100));
  EXPECT_EQ(ev.eval(Expr::eulerE(2), 60), dilate(eulerE(1, 60), 2));
  EXPECT_EQ(ev.eval(Expr::monomial(3, -2), 5).coeffs()[3], -2);
  EXPECT_EQ(ev.eval(Expr::constant(7), 4), scale(QSeries::one(4), 7));
  EXPECT_EQ(ev.eval(Expr::threeSquares(), 300), pow(phi(300), 3));
  EXPECT_EQ(ev.eval(Expr::ternary({1, 1, 3, 0, 0, 1}), 50), thetaSeriesTernary({1, 1, 3, 0, 0, 1}, 50));
}

TEST(Expr, OperatorsFollowSeriesArithmetic) {
  Evaluator ev;
  const Expr x = Expr::phi(), y = Expr::psi();
  const QSeries a = phi(80), b = psi(80);
  EXPECT_EQ(ev.eval(x + y, 80), add(a, b));
  EXPECT_EQ(ev.eval(x - y, 80), sub(a, b));
  EXPECT_EQ(ev.eval(-x, 80), neg(a));
  EXPECT_EQ(ev.eval(3 * x, 80), scale(a, 3));
  EXPECT_EQ(ev.eval(x * y, 80), mul(a, b));
  EXPECT_EQ(ev.eval(pow(x, 4), 80), pow(a, 4));
  EXPECT_EQ(ev.eval((x * y) / y, 80), a);
  EXPECT_EQ(ev.eval(alternate(x), 80), alternate(a));
  EXPECT_EQ(ev.eval(legendreTwist(x, 5), 80), twist(a, [](int n) { return legendre(-n, 5); }));
}

TEST(Expr, DilationAtOrdersNotDivisibleByTheFactor) {
  Evaluator ev;
  for (int n : {0, 1, 6, 7, 8, 99}) {
    const QSeries got = ev.eval(dilate(Expr::psi(), 7), n);
    EXPECT_EQ(got.trunc(), n);
    EXPECT_EQ(got, dilate(psi(n), 7)) << n;
  }
}

TEST(Expr, SiftReachesFarEnough) {
  Evaluator ev;
  const QSeries cube = pow(phi(5 * 40 + 4), 3);
  for (int s = 0; s < 5; ++s) EXPECT_EQ(ev.eval(sift(pow(Expr::phi(), 3), 5, s), 40), sift(cube, SiftSpec(5, s)));
  // The lattice path and the generic path agree.
  for (int s : {0, 1, 9}) {
    const QSeries fast = ev.eval(sift(Expr::threeSquares(), 25, s), 30);
    const QSeries slow = ev.eval(sift(pow(Expr::phi(), 3), 25, s), 30);
    EXPECT_EQ(fast, slow);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(fast[k], bruteThreeSquares(25 * k + s));
  }
}

TEST(Expr, GenusThetaUsesWeights) {
  Evaluator ev;
  // TG1 at 3 is the single class x^2+y^2+3z^2+xy with 48/|Aut| = 2.
  EXPECT_EQ(ev.eval(Expr::genusTheta(3, 1, 48), 100), scale(thetaSeriesTernary({1, 1, 3, 0, 0, 1}, 100), 2));
  QSeries sum = QSeries::zero(100);
  const Genus g = tg2(23);
  for (std::size_t i = 0; i < g.size(); ++i)
    sum = add(sum, scale(thetaSeriesTernary(g.members[i], 100), 96 / g.autCounts[i]));
  EXPECT_EQ(ev.eval(Expr::genusTheta(23, 2, 96), 100), sum);
  EXPECT_THROW(ev.eval(Expr::genusTheta(23, 1, 5), 10), Error);
}

TEST(Expr, PrintedForms) {
  EXPECT_EQ((Expr::phi() * Expr::phi(5)).str(), "phi(q)*phi(q^5)");
  EXPECT_EQ(sift(Expr::threeSquares(), 25, 0).str(), "S[25,0](s(q))");
  EXPECT_EQ(Expr::ternary({1, 1, 3, 0, 0, 1}).str(), "(1,1,3,0,0,1)");
  EXPECT_EQ(Expr::binary({2, 2, 3}).str(), "B(2,2,3)");
  EXPECT_EQ(Expr::binary({30, 20, 30, 20, 20, 5}).str(), "B(30,20,30;20,20,5)");
  EXPECT_NE(Expr::phi(2).str(), dilate(Expr::phi(), 2).str());
}

TEST(Expr, CacheServesLowerOrdersAndRecomputesHigherOnes) {
  Evaluator ev;
  const Expr e = pow(Expr::phi(), 3) - 3 * (Expr::phi() * pow(Expr::phi(5), 2));
  const QSeries high = ev.eval(e, 200);
  EXPECT_EQ(ev.eval(e, 50), high.truncated(50));
  Evaluator fresh;
  EXPECT_EQ(fresh.eval(e, 20), high.truncated(20));
  EXPECT_EQ(fresh.eval(e, 200), high);
  fresh.clear();
  EXPECT_EQ(fresh.eval(e, 120), high.truncated(120));
}

TEST(Expr, SharedEvaluatorIsDeterministicAcrossThreads) {
  Evaluator shared;
  const Expr e = sift(pow(Expr::phi(), 3), 25, 0) - 5 * pow(Expr::phi(), 3);
  const QSeries expected = Evaluator().eval(e, 150);
  std::vector<QSeries> got(8, QSeries::zero(0));
  std::vector<std::thread> pool;
  for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { got[i] = shared.eval(e, 50 + 20 * (i % 6)); });
  for (auto& t : pool) t.join();
  for (int i = 0; i < 8; ++i) EXPECT_EQ(got[i], expected.truncated(50 + 20 * (i % 6)));
}

TEST(Expr, InvalidConstructionsAreRejected) {
  EXPECT_THROW(Expr::monomial(-1), DomainError);
  EXPECT_THROW(Expr::phi(0), DomainError);
  EXPECT_THROW(sift(Expr::phi(), 3, 3), DomainError);
  EXPECT_THROW(legendreTwist(Expr::phi(), 9), DomainError);
  EXPECT_THROW(Expr::ternary({1, 1, -3, 0, 0, 0}), DomainError);
  EXPECT_THROW(Expr::genusTheta(5, 3, 48), DomainError);
  const Constraint c3 = Constraint::fromPredicate(2, 3, [](const std::vector<int>&) { return true; });
  EXPECT_THROW(Expr::constrained(BinaryFormExt{1, 0, 1}, c3, "x"), DomainError);
  Evaluator ev;
  EXPECT_THROW(ev.eval(Expr::phi() / (2 * Expr::phi()), 10), DomainError);
  EXPECT_THROW(ev.eval(Expr::phi(), -1), DomainError);
}
