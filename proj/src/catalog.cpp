#include "ternary/catalog.hpp"

#include "ternary/genus.hpp"

namespace ternary {

namespace {

// Short builders so each entry reads like the formula it encodes.
Expr ph(int k = 1) { return Expr::phi(k); }
Expr ps(int k = 1) { return Expr::psi(k); }
Expr fr(int r, int s) { return Expr::thetaF(r, s); }
Expr eu(int k = 1) { return Expr::eulerE(k); }
Expr qq(int e, std::int64_t c = 1) { return Expr::monomial(e, c); }
Expr num(std::int64_t c) { return Expr::constant(c); }
Expr tf(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e, std::int64_t f) {
  return Expr::ternary({a, b, c, d, e, f});
}
Expr bf(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t u = 0, std::int64_t v = 0, std::int64_t w = 0) {
  return Expr::binary({a, b, c, u, v, w});
}
Expr S(const Expr& x, int t, int s) { return sift(x, t, s); }
Expr dil(const Expr& x, int k) { return dilate(x, k); }
Expr alt(const Expr& x) { return alternate(x); }

// x^2+y^2+z^2 counted on the lattice, independent of the phi constructor.
Expr s3() { return Expr::threeSquares(); }
// 2x^2+2y^2+2z^2-yz+zx+xy.
Expr T() { return tf(2, 2, 2, -1, 1, 1); }
// x^2+xy+y^2.
Expr a(int k = 1) { return k == 1 ? bf(1, 1, 1) : dil(bf(1, 1, 1), k); }

// T restricted to y = r, z = -r mod 4.
Expr X(int r) {
  const Constraint c = Constraint::fromPredicate(
      4, 3, [r](const std::vector<int>& t) { return t[1] == r && t[2] == (4 - r) % 4; });
  return Expr::constrained(TernaryForm{2, 2, 2, -1, 1, 1}, c, "y=" + std::to_string(r) + ",z=-" +
                                                                  std::to_string(r) + " mod 4");
}

Expr sameParity(const BinaryFormExt& b, bool same) {
  const Constraint c =
      Constraint::fromPredicate(2, 2, [same](const std::vector<int>& t) { return (t[0] == t[1]) == same; });
  return Expr::constrained(b, c, same ? "m=n mod 2" : "m!=n mod 2");
}

Expr sum(const std::vector<std::pair<std::int64_t, TernaryForm>>& terms) {
  std::optional<Expr> acc;
  for (const auto& [c, f] : terms) {
    Expr t = c * Expr::ternary(f);
    acc = acc ? *acc + t : t;
  }
  return *acc;
}

std::vector<IdentitySpec> build() {
  std::vector<IdentitySpec> out;
  auto add = [&out](std::string id, Expr lhs, Expr rhs, std::string description, int maxOrder = 0) {
    out.push_back({std::move(id), std::move(lhs), std::move(rhs), std::move(description), maxOrder});
  };

  const Expr phi3 = pow(ph(), 3);
  const Expr F = fr(1, 9) * fr(3, 7);  // f(q,q^9) f(q^3,q^7)
  const Expr P = phi3 - 3 * (ph() * pow(ph(5), 2));

  // The s(p^2 n) relation written on generating functions:
  // sum s(p^2 n) q^n = (p+1) s - twist_p(s) - p s(q^{p^2}).
  for (int p : {3, 5, 7}) {
    add("E1.1.p" + std::to_string(p), S(s3(), p * p, 0),
        (p + 1) * s3() - legendreTwist(s3(), p) - p * dil(s3(), p * p),
        "s(p^2 n) = (p+1-(-n|p)) s(n) - p s(n/p^2) for p = " + std::to_string(p));
  }

  // Products and dissections.
  add("E1.9", ph(), pow(eu(2), 5) / (pow(eu(4), 2) * pow(eu(), 2)), "phi as an eta quotient");
  add("E1.9f", ph(), fr(1, 1), "phi(q) = f(q,q)");
  add("E1.10", ps(), fr(1, 3), "psi(q) = f(q,q^3)");
  add("E1.11", ps(), pow(eu(2), 2) / eu(), "psi as an eta quotient");
  add("E1.12", F, eu(20) * eu(5) * pow(eu(2), 2) / (eu(4) * eu()), "f(q,q^9) f(q^3,q^7) as an eta quotient");
  add("E1.13", fr(1, 4) * fr(2, 3), pow(eu(5), 3) * eu(2) / (eu(10) * eu()),
      "f(q,q^4) f(q^2,q^3) as an eta quotient");
  add("E1.14", ph(), ph(4) + qq(1, 2) * ps(8), "2-dissection of phi");
  add("E1.15", ph(), ph(9) + qq(1, 2) * fr(3, 15), "3-dissection of phi");
  add("E1.16", ph(), ph(25) + qq(1, 2) * fr(15, 35) + qq(4, 2) * fr(5, 45), "5-dissection of phi");
  add("E1.19", pow(ph(), 2), pow(ph(2), 2) + qq(1, 4) * pow(ps(4), 2), "phi^2 from Schroeter with a=b=c=d=q");
  add("E1.20", pow(ph(), 2), pow(ph(4), 2) + qq(1, 4) * pow(ps(4), 2) + qq(2, 4) * pow(ps(8), 2),
      "4-dissection of phi^2");
  add("E1.21", pow(F, 2),
      pow(fr(4, 16), 2) * pow(fr(8, 12), 2) + qq(1, 2) * (fr(4, 16) * fr(8, 12) * fr(6, 14) * fr(2, 18)) +
          qq(2) * (pow(fr(6, 14), 2) * pow(fr(2, 18), 2)),
      "square of the Schroeter split of f(q,q^9) f(q^3,q^7)");
  add("E1.22", ph() * fr(2, 8) * fr(4, 6),
      ps(4) * ph(5) * ph(10) + qq(1, 2) * (ps(2) * ps(10) * ph(5)) + qq(2) * (ps(20) * ph(2) * ph(5)),
      "phi f(q^2,q^8) f(q^4,q^6)");
  add("E1.23", ph() * ph(5) + bf(2, 2, 3), 2 * (eu(10) * eu(5) * eu(4) * eu(2) / (eu(20) * eu())),
      "phi(q) phi(q^5) plus the theta series of 2m^2+2mn+3n^2");
  add("E1.24", ps(10) * ph() * ph(5) + ps(10) * bf(2, 2, 3), 2 * (ps(2) * F),
      "previous identity multiplied by psi(q^10)");

  // Parity-restricted theorems, n = 1, 2 mod 4.
  for (int r : {1, 2}) {
    add("E1.3." + std::to_string(r), S(S(s3(), 25, 0) - 5 * s3(), 4, r), 4 * S(T(), 4, r),
        "s(25n) - 5 s(n) = 4 h(n) for n = " + std::to_string(r) + " mod 4");
    add("E1.4." + std::to_string(r), S(S(s3(), 9, 0) - 3 * s3(), 4, r), 2 * S(tf(1, 1, 3, 0, 0, 1), 4, r),
        "s(9n) - 3 s(n) = 2 g(n) for n = " + std::to_string(r) + " mod 4");
  }

  // Degree 5 modular equation and the sifting chain.
  add("E2.1", pow(ph(), 2) - pow(ph(5), 2), qq(1, 4) * F, "modular equation of degree 5");
  add("E2.1c", pow(ps(), 2) - qq(1) * pow(ps(5), 2), fr(1, 4) * fr(2, 3), "companion of the degree 5 equation");
  add("E2.3", S(pow(ph(), 2), 5, 0), pow(ph(5), 2) + qq(1, 8) * F, "S_{5,0} phi^2");
  add("E2.4", S(pow(ph(), 2) - pow(ph(5), 2), 5, 0), -(pow(ph(), 2) - pow(ph(5), 2)) + qq(1, 8) * F,
      "S_{5,0} of the degree 5 difference");
  add("E2.5", S(qq(1) * F, 5, 0), qq(1) * F, "q f(q,q^9) f(q^3,q^7) is fixed by S_{5,0}");
  add("E2.6", S(phi3, 5, 0), pow(ph(5), 3) + qq(1, 24) * (ph(5) * F), "S_{5,0} phi^3");
  add("E2.7", S(phi3, 5, 1), 6 * (fr(3, 7) * (pow(ph(5), 2) + qq(1, 4) * F)), "S_{5,1} phi^3");
  add("E2.7b", S(phi3, 5, 1), 6 * (fr(3, 7) * pow(ph(), 2)), "S_{5,1} phi^3 folded");
  add("E2.8", S(phi3, 5, 4), 6 * (fr(1, 9) * (pow(ph(5), 2) + qq(1, 4) * F)), "S_{5,4} phi^3");
  add("E2.8b", S(phi3, 5, 4), 6 * (fr(1, 9) * pow(ph(), 2)), "S_{5,4} phi^3 folded");
  add("ECH", S(s3(), 5, 1),
      Expr::product({{2, 2, -1, 2}, {10, 10, -1, 1}, {2, 1, +1, 4}, {10, 7, +1, 1}, {10, 3, +1, 1}}, 6),
      "sum s(5n+1) q^n as an infinite product");
  for (int r : {1, 4})
    add("E2.9." + std::to_string(r), S(P, 5, r), num(0), "S_{5," + std::to_string(r) + "} (phi^3 - 3 phi phi(q^5)^2)");
  add("E2.10", S(phi3, 25, 0), phi3 + qq(1, 24) * (ph() * F), "S_{25,0} phi^3");
  add("E2.11", S(phi3, 25, 0) - 5 * phi3, 2 * P, "S_{25,0} phi^3 - 5 phi^3");
  add("E2.11a", S(phi3, 25, 0) - 5 * phi3, -4 * phi3 + 6 * (ph() * (pow(ph(), 2) - pow(ph(5), 2))),
      "S_{25,0} phi^3 - 5 phi^3, intermediate form");
  for (int r : {1, 4}) {
    add("E2.12." + std::to_string(r), S(phi3, 125, 25 * r) - 5 * S(phi3, 5, r), num(0),
        "S_{125,25r} phi^3 = 5 S_{5,r} phi^3, r = " + std::to_string(r));
  }
  add("E2.13", phi3, s3(), "phi^3 is the theta series of x^2+y^2+z^2");
  for (int r : {1, 4}) {
    add("E2.14." + std::to_string(r), S(S(s3(), 25, 0) - 5 * s3(), 5, r), num(0),
        "s(25n) = 5 s(n) for n = " + std::to_string(r) + " mod 5");
  }
  add("E2.15", S(phi3, 25, 0) - 7 * phi3, -6 * (ph() * pow(ph(5), 2)), "S_{25,0} phi^3 - 7 phi^3");
  for (int r : {2, 3}) {
    add("E2.16." + std::to_string(r), S(S(phi3, 25, 0) - 7 * phi3, 5, r), num(0),
        "S_{5,r} (S_{25,0} phi^3 - 7 phi^3), r = " + std::to_string(r));
    add("E2.17." + std::to_string(r), S(S(s3(), 25, 0) - 7 * s3(), 5, r), num(0),
        "s(25n) = 7 s(n) for n = " + std::to_string(r) + " mod 5");
  }
  const Expr P6 = phi3 - 6 * (ph() * pow(ph(5), 2));
  add("E2.18", S(S(phi3, 25, 0) - 6 * phi3, 5, 0), S(P6, 5, 0), "S_{5,0} (S_{25,0} phi^3 - 6 phi^3)");
  add("E2.18b", S(P6, 5, 0), -5 * pow(ph(5), 3), "S_{5,0} (phi^3 - 6 phi phi(q^5)^2)");
  add("E2.19", S(phi3, 125, 0) - 6 * S(phi3, 5, 0), -5 * pow(ph(5), 3), "S_{125,0} phi^3 - 6 S_{5,0} phi^3");
  add("E2.20", S(S(s3(), 25, 0) - 6 * s3(), 5, 0), -5 * dil(s3(), 5), "s(25n) - 6 s(n) = -5 s(n/25) for 5 | n");

  // Theorem on s(25n) - 5 s(n) via the form T.
  for (int r : {1, 2}) {
    add("E3.1." + std::to_string(r), S(phi3, 100, 25 * r) - 5 * S(phi3, 4, r), 4 * S(T(), 4, r),
        "S_{100,25r} phi^3 - 5 S_{4,r} phi^3 = 4 S_{4,r} T, r = " + std::to_string(r));
  }
  add("E3.2", S(T(), 4, 1), 6 * S(X(1), 4, 1), "S_{4,1} T through the constrained sum X(1)");
  add("E3.3", S(T(), 4, 2), 3 * S(X(0) + X(2), 4, 2), "S_{4,2} T through X(0) + X(2)");
  for (int r = 0; r < 4; ++r) {
    add("E3.5." + std::to_string(r), X(r), ph(2) * bf(30, 20, 30, 20 * r, 20 * r, 5 * r * r),
        "X(" + std::to_string(r) + ") after completing the square in x");
  }
  add("E3.6", X(0) + X(2), ph(2) * ph(10) * ph(20), "X(0) + X(2) as a product of three phi");
  add("E3.7", S(T(), 4, 2), 3 * (ph(5) * S(ph(2) * ph(10), 4, 2)), "S_{4,2} T through phi(q^2) phi(q^10)");
  add("E3.8", 4 * S(T(), 4, 2), 24 * (ph(5) * (ps(4) * ph(10) + qq(2) * (ph(2) * ps(20)))), "4 S_{4,2} T");
  const Expr B5 = bf(30, 20, 30, 20, 20, 5);
  add("E3.9", 4 * S(T(), 4, 1), 24 * S(ph(2) * B5, 4, 1), "4 S_{4,1} T through the shifted binary sum");
  add("E3.10", 24 * S(ph(2) * B5, 4, 1),
      qq(1, 24) * (ph(2) * bf(20, 0, 10, 10, 0, 0)) + qq(4, 48) * (ps(4) * bf(20, 0, 10, -10, -10, 0)),
      "shifted binary sum split by the parity of y - z");
  add("E3.10b", 24 * S(ph(2) * B5, 4, 1),
      qq(1, 24) * (ph(2) * S(sameParity({30, 20, 30, 20, 20, 0}, true), 4, 0)) +
          qq(1, 48) * (ps(4) * S(sameParity({30, 20, 30, 20, 20, 2}, false), 4, 0)),
      "parity split before the change of variables");
  add("E3.10c", 4 * S(T(), 4, 1), qq(1, 24) * (ps(10) * (ph(2) * ph(10) + qq(3, 4) * (ps(4) * ps(20)))),
      "4 S_{4,1} T as theta products");
  add("E3.10d", bf(2, 2, 3), ph(2) * ph(10) + qq(3, 4) * (ps(4) * ps(20)), "theta series of 2m^2+2mn+3n^2");
  add("E3.11", 4 * S(T(), 4, 1), qq(1, 24) * (ps(10) * bf(2, 2, 3)), "4 S_{4,1} T");
  for (int r : {1, 2}) {
    add("E3.12." + std::to_string(r), S(phi3, 100, 25 * r) - 5 * S(phi3, 4, r), 2 * S(P, 4, r),
        "S_{100,25r} phi^3 - 5 S_{4,r} phi^3 through S_{25,0}, r = " + std::to_string(r));
  }
  add("E3.13", S(P, 4, 1), qq(1, 24) * (ps(2) * F) - qq(1, 12) * (ph() * ph(5) * ps(10)),
      "S_{4,1} (phi^3 - 3 phi phi(q^5)^2)");
  add("E3.14", S(P, 4, 2), qq(1, -24) * (ps(2) * pow(ps(5), 2)) + 12 * (ph() * fr(2, 8) * fr(4, 6)),
      "S_{4,2} (phi^3 - 3 phi phi(q^5)^2)");
  add("E3.15", S(phi3, 100, 25) - 5 * S(phi3, 4, 1), qq(1, 48) * (ps(2) * F) - qq(1, 24) * (ph() * ph(5) * ps(10)),
      "S_{100,25} phi^3 - 5 S_{4,1} phi^3");
  add("E3.16", S(phi3, 100, 50) - 5 * S(phi3, 4, 2),
      qq(1, -48) * (ps(2) * pow(ps(5), 2)) + 24 * (ph() * fr(2, 8) * fr(4, 6)), "S_{100,50} phi^3 - 5 S_{4,2} phi^3");
  add("E3.17.1", 2 * (ps(2) * F) - ph() * ph(5) * ps(10), ps(10) * bf(2, 2, 3),
      "case r = 1 reduced to theta products");
  add("E3.17.2", qq(1, -2) * (ps(2) * pow(ps(5), 2)) + ph() * fr(2, 8) * fr(4, 6),
      ph(5) * ps(4) * ph(10) + qq(2) * (ph(2) * ph(5) * ps(20)), "case r = 2 reduced to theta products");

  // Cubic identities.
  for (int r : {1, 2}) {
    add("E4.1." + std::to_string(r), S(phi3, 36, 9 * r) - 3 * S(phi3, 4, r), 2 * S(ph(3) * a(), 4, r),
        "S_{36,9r} phi^3 - 3 S_{4,r} phi^3 = 2 S_{4,r} phi(q^3) a(q), r = " + std::to_string(r));
  }
  add("E4.2", 4 * (a(2) * ph(3)), phi3 + 3 * (pow(ph(3), 4) / ph()), "4 a(q^2) phi(q^3)");
  add("E4.3", a(), a(3) + qq(1, 6) * (pow(eu(9), 3) / eu(3)), "3-dissection of a(q)");
  add("E4.4", a(), ph() * ph(3) + qq(1, 4) * (ps(2) * ps(6)), "a(q) through phi and psi");
  add("E4.4b", a(), 2 * (ph() * ph(3)) - alt(ph()) * alt(ph(3)), "a(q) through phi(q) and phi(-q)");
  add("E4.4c", 2 * a(2) - a(), pow(alt(ph()), 3) / alt(ph(3)), "2 a(q^2) - a(q)");
  add("E4.5", a(), a(4) + qq(1, 6) * (ps(2) * ps(6)), "a(q) - a(q^4)");
  add("E4.6", qq(1, 2) * (ps(2) * ps(6)), sameParity({1, 0, 3}, false), "u^2+3v^2 with u, v of opposite parity");
  add("E4.7", qq(1, 2) * (ps(2) * ps(6)), qq(1, 2) * (ps(8) * ph(12)) + qq(3, 2) * (ph(4) * ps(24)),
      "opposite parity sum split by which variable is odd");
  add("E4.8", a(), a(4) + qq(1, 6) * (ps(8) * ph(12)) + qq(3, 6) * (ph(4) * ps(24)), "4-dissection of a(q)");
  add("E4.9", pow(ph(), 2) - pow(ph(3), 2), qq(1, 4) * (ps() * ps(3) * ps(6)) / ps(2), "modular equation of degree 3");
  add("E4.10", pow(ph(), 2) + pow(ph(3), 2), 2 * (ps() * fr(1, 2) * fr(2, 4)) / ps(2),
      "companion of the degree 3 equation");
  add("E4.11", fr(1, 2), pow(eu(3), 2) * eu(2) / (eu(6) * eu()), "f(q,q^2) as an eta quotient");
  add("E4.12", fr(1, 5), eu(12) * eu(3) * pow(eu(2), 2) / (eu(6) * eu(4) * eu()), "f(q,q^5) as an eta quotient");
  add("E4.13", pow(ph(), 4) - pow(ph(3), 4), qq(1, 8) * (ph(3) * pow(fr(1, 5), 3)), "phi^4 - phi(q^3)^4");
  add("E4.14", pow(ph(), 4) / ph(3), pow(ph(3), 3) + qq(1, 8) * pow(fr(1, 5), 3), "phi^4 / phi(q^3)");
  add("E4.14b", pow(ph(3), 3) + qq(1, 8) * pow(fr(1, 5), 3), S(pow(ph(9) + qq(1, 2) * fr(3, 15), 3), 3, 0),
      "recognised as S_{3,0} of the cubed 3-dissection");
  add("E4.15", S(phi3, 3, 0), pow(ph(), 4) / ph(3), "S_{3,0} phi^3");
  add("E4.20", S(phi3, 9, 0), (4 * pow(ph(), 4) - 3 * pow(ph(3), 4)) / ph(), "S_{9,0} phi^3");
  add("E4.21", S(phi3, 9, 0), (pow(ph(3), 4) + qq(1, 32) * (ph(3) * pow(fr(1, 5), 3))) / ph(),
      "S_{9,0} phi^3 before simplification");
  add("E4.24", S(phi3, 9, 0) - 5 * phi3, -phi3 - 3 * (pow(ph(3), 4) / ph()), "S_{9,0} phi^3 - 5 phi^3");
  add("E4.24b", S(phi3, 9, 0) - 5 * phi3, -4 * (a(2) * ph(3)), "S_{9,0} phi^3 - 5 phi^3 through a(q^2)");
  add("E4.25", S(phi3, 9, 0) - 3 * phi3, 2 * phi3 - 4 * (a(2) * ph(3)), "S_{9,0} phi^3 - 3 phi^3");

  // Cubic refinements and the extended theorems.
  for (int r : {1, 2}) {
    const std::string rs = std::to_string(r);
    add("E5.1." + rs, S(phi3 - 2 * (a(2) * ph(3)), 4, r), S(a() * ph(3), 4, r), "cubic lemma, r = " + rs);
    add("E5.1a." + rs, S(phi3, 36, 9 * r) - 3 * S(phi3, 4, r), 2 * S(phi3 - 2 * (ph(3) * a(2)), 4, r),
        "S_{36,9r} phi^3 - 3 S_{4,r} phi^3 through the lemma, r = " + rs);
  }
  const Expr cubicRatio = pow(ph(), 3) / ph(3);
  const Expr cubicRatioAlt = pow(alt(ph()), 3) / alt(ph(3));
  add("E5.2", phi3, ph(3) * (a() + 2 * a(2) - 2 * a(4)), "phi^3 through a(q), a(q^2), a(q^4)");
  add("E5.3", cubicRatio, 2 * a(2) - a() + 2 * (a() - a(4)), "phi^3 / phi(q^3)");
  add("E5.4", cubicRatio - cubicRatioAlt, qq(1, 12) * (ps(2) * ps(6)), "odd part of phi^3 / phi(q^3)");
  add("E5.5", cubicRatio - cubicRatioAlt, a() - alt(a()), "odd part through a(q)");
  add("E5.5b", a() - alt(a()), 3 * (ph() * ph(3) - alt(ph()) * alt(ph(3))), "odd part of a(q)");
  add("E5.6", ph() * ph(3) - alt(ph()) * alt(ph(3)), qq(1, 4) * (ps(2) * ps(6)), "odd part of phi(q) phi(q^3)");
  add("E5.7", cubicRatio - cubicRatioAlt, qq(1, 12) * (ps(2) * ps(6)), "odd part of phi^3 / phi(q^3), restated");
  add("E5.8", S(phi3, 9, 0) - 3 * phi3, 2 * (ph(3) * a()) - 4 * (ph(3) * a(4)), "S_{9,0} phi^3 - 3 phi^3 through a");
  add("E5.9", S(s3(), 9, 0) - 3 * s3(), 2 * tf(1, 1, 3, 0, 0, 1) - 4 * tf(4, 3, 4, 0, 4, 0),
      "s(9n) - 3 s(n) for every n");
  add("E5.10", S(s3(), 25, 0) - 5 * s3(), 4 * T() - 8 * tf(8, 3, 7, 2, 8, 4), "s(25n) - 5 s(n) for every n");
  add("E5.10'", P, 2 * T() - 4 * tf(8, 3, 7, 2, 8, 4), "phi^3 - 3 phi phi(q^5)^2 as ternary theta series");

  // Explicit genus identities.
  const std::vector<std::pair<int, std::vector<std::pair<std::int64_t, TernaryForm>>>> explicitCases = {
      {7, {{6, {1, 2, 7, 0, 0, 1}}, {-12, {4, 7, 8, 0, 4, 0}}}},
      {11, {{4, {3, 4, 4, -3, 2, 2}}, {6, {1, 3, 11, 0, 0, 1}}, {-8, {3, 15, 15, -14, 2, 2}}, {-12, {4, 11, 12, 0, 4, 0}}}},
      {13, {{12, {2, 5, 5, -3, 1, 1}}, {-24, {8, 7, 15, 2, 8, 4}}}},
      {17, {{12, {3, 5, 6, 1, 2, 3}}, {4, {3, 6, 6, -5, 2, 2}}, {-24, {7, 11, 20, -8, 4, 6}}, {-8, {3, 23, 23, -22, 2, 2}}}},
      {19, {{6, {1, 5, 19, 0, 0, 1}}, {12, {4, 5, 6, 5, 1, 2}}, {-12, {4, 19, 20, 0, 4, 0}}, {-24, {7, 11, 23, -10, 6, 2}}}},
      {23,
       {{4, {3, 8, 8, -7, 2, 2}},
        {6, {1, 6, 23, 0, 0, 1}},
        {12, {2, 3, 23, 0, 0, 1}},
        {-8, {3, 31, 31, -30, 2, 2}},
        {-12, {4, 23, 24, 0, 4, 0}},
        {-24, {8, 23, 12, 0, 4, 0}}}},
  };
  const char* explicitIds[] = {"E5.11", "E5.42", "E5.43", "E5.44", "E5.45", "E5.46"};
  for (std::size_t i = 0; i < explicitCases.size(); ++i) {
    const int p = explicitCases[i].first;
    add(explicitIds[i], S(s3(), p * p, 0) - p * s3(), sum(explicitCases[i].second),
        "s(p^2 n) - p s(n) with explicit forms, p = " + std::to_string(p));
  }

  // Genus identities with automatically constructed genera.
  for (std::int64_t p : catalogPrimes()) {
    const int pp = static_cast<int>(p * p);
    const std::string ps_ = std::to_string(p);
    const Expr lhs = S(s3(), pp, 0) - static_cast<std::int64_t>(p) * s3();
    const Expr w1 = Expr::genusTheta(p, 1, 48);
    add("E5.17.p" + ps_, lhs, w1 - Expr::genusTheta(p, 2, 96), "s(p^2 n) - p s(n) over TG1 and TG2, p = " + ps_);
    add("E5.16.p" + ps_ + ".r0", S(lhs, 4, 0), S(w1, 4, 0) - Expr::genusTheta(p, 1, 96),
        "TG1 form of the genus identity at n = 0 mod 4, p = " + ps_);
    for (int r : {1, 2}) {
      add("E5.16.p" + ps_ + ".r" + std::to_string(r), S(lhs, 4, r), S(w1, 4, r),
          "TG1 form of the genus identity at n = " + std::to_string(r) + " mod 4, p = " + ps_);
    }
  }

  // Signature properties of the second genus.
  const std::vector<std::tuple<int, TernaryForm, TernaryForm>> pairs = {
      {17, {7, 11, 20, -8, 4, 6}, {3, 5, 6, 1, 2, 3}},  {17, {3, 23, 23, -22, 2, 2}, {3, 6, 6, -5, 2, 2}},
      {23, {3, 31, 31, -30, 2, 2}, {3, 8, 8, -7, 2, 2}}, {23, {4, 23, 24, 0, 4, 0}, {1, 6, 23, 0, 0, 1}},
      {23, {8, 23, 12, 0, 4, 0}, {2, 3, 23, 0, 0, 1}},
  };
  int index = 0, lastP = 0;
  for (const auto& [p, upper, lower] : pairs) {
    index = p == lastP ? index + 1 : 1;
    lastP = p;
    const std::string tag = std::to_string(p) + "." + std::to_string(index);
    const Expr f = Expr::ternary(upper);
    add("EPR." + tag, S(f, 4, 0), Expr::ternary(lower), "R_f(4n) = R_H(f)(n) for " + upper.str());
    for (int r : {1, 2})
      add("EPR2." + tag + ".r" + std::to_string(r), S(f, 4, r), num(0),
          upper.str() + " misses n = " + std::to_string(r) + " mod 4");
  }

  add("EFINAL", qq(1, 8) * (alt(ps()) * pow(eu(2), 2) * S(Expr::product({{2, 1, +1, 1}}), 7, 5)),
      phi3 + ph(7) * (bf(1, 1, 2) - 2 * dil(bf(1, 1, 2), 4)), "product identity derived from the p = 7 case",
      // S_{7,5} of the product has coefficients beyond int64 past order about 240.
      200);
  return out;
}

}  // namespace

const std::vector<std::int64_t>& catalogPrimes() {
  static const std::vector<std::int64_t> primes = {3, 5, 7, 11, 13, 17, 19, 23};
  return primes;
}

const std::vector<IdentitySpec>& catalog() {
  static const std::vector<IdentitySpec> entries = build();
  return entries;
}

std::optional<IdentitySpec> lookup(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  return std::nullopt;
}

}  // namespace ternary
