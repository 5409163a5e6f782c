#include <gtest/gtest.h>

#include <set>

#include "ternary/catalog.hpp"
#include "ternary/verify.hpp"

using namespace ternary;

namespace {

IdentitySpec byId(const std::string& id) {
  auto spec = lookup(id);
  if (!spec) throw std::runtime_error("missing " + id);
  return *spec;
}

// Same left side as a catalogued identity, different right side.
VerificationReport checkVariant(const std::string& id, const Expr& rhs, int order) {
  IdentitySpec spec = byId(id);
  spec.id += ".variant";
  spec.rhs = rhs;
  Evaluator ev;
  return verifyIdentity(spec, order, ev);
}

// Building blocks named as in the catalog.
Expr ph(int k = 1) { return Expr::phi(k); }
Expr ps(int k = 1) { return Expr::psi(k); }
Expr eu(int k = 1) { return Expr::eulerE(k); }

}  // namespace

TEST(Catalog, SizeAndUniqueIds) {
  const auto& all = catalog();
  EXPECT_GE(all.size(), 55u);
  std::set<std::string> ids;
  for (const auto& s : all) {
    EXPECT_TRUE(ids.insert(s.id).second) << s.id;
    EXPECT_FALSE(s.description.empty()) << s.id;
  }
  for (const char* id : {"E2.1", "ECH", "EFINAL", "E5.9", "E5.10", "E1.3.1", "E1.4.2"}) EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Catalog, LookupReturnsTheStoredSides) {
  const auto spec = lookup("E2.1");
  ASSERT_TRUE(spec);
  EXPECT_EQ(spec->lhs.str(), "(phi(q)^2 - phi(q^5)^2)");
  EXPECT_EQ(spec->rhs.str(), "4*q^1*f(q^1,q^9)*f(q^3,q^7)");
  EXPECT_FALSE(lookup("E9.9"));
  EXPECT_THROW(verifyIdentity("E9.9", 10), DomainError);
}

TEST(Catalog, SelectedIdentitiesPass) {
  for (const char* id : {"E2.1", "E1.23", "E2.6", "E2.10", "E4.15", "ECH"}) {
    const auto r = verifyIdentity(id, 300);
    EXPECT_TRUE(r.passed()) << id << " " << r.detail;
    EXPECT_EQ(r.order, 300);
    EXPECT_FALSE(r.firstMismatch);
  }
}

TEST(Catalog, WholeCatalogPassesAtOddOrder) {
  // An order that is not a multiple of any dilation or sift modulus.
  for (const auto& r : verifySuite(catalog(), 307)) EXPECT_TRUE(r.passed()) << r.id << " " << r.detail;
}

TEST(Catalog, ExtremeEntryIsCappedWithinInt64) {
  const auto r = verifyIdentity("EFINAL", 300);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.order, 200);
  EXPECT_EQ(r.detail, "order capped at 200 to stay within int64");
  EXPECT_EQ(verifyIdentity("EFINAL", 150).order, 150);
}

TEST(Catalog, PerturbedRightSideFailsAtFirstCoefficient) {
  const auto r = checkVariant("E2.1", 5 * byId("E2.1").rhs, 300);
  EXPECT_FALSE(r.passed());
  ASSERT_TRUE(r.firstMismatch);
  // phi^2 - phi(q^5)^2 = 4q + ..., so the first difference is at q^1.
  EXPECT_EQ(r.firstMismatch->index, 1);
  EXPECT_EQ(r.firstMismatch->lhs, 4);
  EXPECT_EQ(r.firstMismatch->rhs, 20);
}

TEST(Catalog, PrintedCoefficientSixOnTheSquareTermFails) {
  const Expr wrong =
      24 * (ph(5) * (ps(4) * ph(10) + Expr::monomial(2, 6) * (ph(2) * ps(20))));
  EXPECT_FALSE(checkVariant("E3.8", wrong, 300).passed());
  const Expr wrong2 = ph(5) * ps(4) * ph(10) + Expr::monomial(2, 6) * (ph(2) * ph(5) * ps(20));
  EXPECT_FALSE(checkVariant("E3.17.2", wrong2, 300).passed());
}

TEST(Catalog, PrintedSquaredEulerFactorFails) {
  const Expr wrong = pow(eu(5), 2) * eu(2) / (eu(10) * eu());
  const auto r = checkVariant("E1.13", wrong, 300);
  EXPECT_FALSE(r.passed());
  ASSERT_TRUE(r.firstMismatch);
  EXPECT_EQ(r.firstMismatch->index, 5);
}

TEST(Catalog, PrintedFactorFourInCubicSiftFails) {
  for (int r : {1, 2}) {
    const Expr wrong = 4 * sift(ph(3) * Expr::binary({1, 1, 1}), 4, r);
    EXPECT_FALSE(checkVariant("E4.1." + std::to_string(r), wrong, 300).passed()) << r;
  }
}

TEST(Catalog, SuiteIsDeterministicAndOrdered) {
  std::vector<IdentitySpec> specs(catalog().begin(), catalog().begin() + 40);
  const auto a = verifySuite(specs, 200);
  const auto b = verifySuite(specs, 200);
  ASSERT_EQ(a.size(), specs.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, specs[i].id);
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].status, b[i].status);
    EXPECT_EQ(a[i].order, b[i].order);
  }
}

TEST(Catalog, SuiteRethrowsEvaluationErrors) {
  std::vector<IdentitySpec> specs = {byId("E2.1")};
  specs.push_back({"bad", Expr::phi() / (2 * Expr::phi()), Expr::phi(), "non unit divisor"});
  EXPECT_THROW(verifySuite(specs, 50), Error);
}
