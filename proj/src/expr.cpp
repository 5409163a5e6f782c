#include "ternary/expr.hpp"

#include "ternary/forms.hpp"
#include "ternary/genus.hpp"

namespace ternary {

namespace {

std::string power(const char* name, int k) {
  return std::string(name) + (k == 1 ? "(q)" : "(q^" + std::to_string(k) + ")");
}

std::string binaryRepr(const BinaryFormExt& b) {
  std::string s = "B(" + std::to_string(b.a) + "," + std::to_string(b.b) + "," + std::to_string(b.c);
  if (b.isAffine()) s += ";" + std::to_string(b.u) + "," + std::to_string(b.v) + "," + std::to_string(b.w);
  return s + ")";
}

void requirePositive(int k, const char* what) {
  if (k < 1) throw DomainError(std::string(what) + " needs a positive parameter");
}

}  // namespace

Expr::Kind Expr::kind() const { return node_->kind; }
const std::string& Expr::str() const { return node_->repr; }

namespace {

Expr::Node leaf(Expr::Kind k, std::string repr) {
  Expr::Node n;
  n.kind = k;
  n.repr = std::move(repr);
  return n;
}

}  // namespace

Expr Expr::constant(std::int64_t c) {
  auto n = leaf(Kind::Constant, std::to_string(c));
  n.ints = {c};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::monomial(int e, std::int64_t c) {
  if (e < 0) throw DomainError("negative exponent in monomial");
  auto n = leaf(Kind::Monomial, (c == 1 ? "" : std::to_string(c) + "*") + "q^" + std::to_string(e));
  n.ints = {e, c};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::phi(int k) {
  requirePositive(k, "phi");
  auto n = leaf(Kind::Phi, power("phi", k));
  n.ints = {k};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::psi(int k) {
  requirePositive(k, "psi");
  auto n = leaf(Kind::Psi, power("psi", k));
  n.ints = {k};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::thetaF(int r, int s) {
  requirePositive(r, "f");
  requirePositive(s, "f");
  auto n = leaf(Kind::ThetaF, "f(q^" + std::to_string(r) + ",q^" + std::to_string(s) + ")");
  n.ints = {r, s};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::eulerE(int k) {
  requirePositive(k, "E");
  auto n = leaf(Kind::EulerE, power("E", k));
  n.ints = {k};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::product(std::vector<APFactor> factors, std::int64_t c) {
  std::string repr = std::to_string(c) + "*prod[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    repr += (i ? "," : "") + std::string("(1") + (f.sign > 0 ? "+" : "-") + "q^(" + std::to_string(f.step) + "j+" +
            std::to_string(f.offset) + "))^" + std::to_string(f.exponent);
  }
  auto n = leaf(Kind::Product, repr + "]");
  n.factors = std::move(factors);
  n.ints = {c};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::binary(const BinaryFormExt& b) {
  if (!b.isPositiveDefinite()) throw DomainError("binary form is not positive definite");
  auto n = leaf(Kind::BinaryTheta, binaryRepr(b));
  n.binary = b;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::ternary(const TernaryForm& f) {
  if (!f.isPositiveDefinite()) throw DomainError("form " + f.str() + " is not positive definite");
  auto n = leaf(Kind::TernaryTheta, f.str());
  n.ternary = f;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::constrained(const BinaryFormExt& b, const Constraint& c, const std::string& label) {
  if (c.arity() != 2) throw DomainError("binary theta needs a constraint of arity 2");
  auto n = leaf(Kind::ConstrainedBinary, binaryRepr(b) + "[" + label + "]");
  n.binary = b;
  n.constraint = c;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::constrained(const TernaryForm& f, const Constraint& c, const std::string& label) {
  if (c.arity() != 3) throw DomainError("ternary theta needs a constraint of arity 3");
  auto n = leaf(Kind::ConstrainedTernary, f.str() + "[" + label + "]");
  n.ternary = f;
  n.constraint = c;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::threeSquares() { return Expr(std::make_shared<const Node>(leaf(Kind::ThreeSquares, "s(q)"))); }

Expr Expr::genusTheta(std::int64_t p, int which, std::int64_t numerator) {
  if (which != 1 && which != 2) throw DomainError("genus selector must be 1 or 2");
  auto n = leaf(Kind::GenusTheta,
                std::to_string(numerator) + "*TG" + std::to_string(which) + "[" + std::to_string(p) + "]");
  n.ints = {p, which, numerator};
  return Expr(std::make_shared<const Node>(std::move(n)));
}

namespace {

Expr::Node inner(Expr::Kind k, std::vector<Expr> children, std::string repr) {
  Expr::Node n;
  n.kind = k;
  n.children = std::move(children);
  n.repr = std::move(repr);
  return n;
}

}  // namespace

Expr operator+(const Expr& x, const Expr& y) {
  return Expr(std::make_shared<const Expr::Node>(inner(Expr::Kind::Add, {x, y}, "(" + x.str() + " + " + y.str() + ")")));
}

Expr operator-(const Expr& x, const Expr& y) {
  return Expr(std::make_shared<const Expr::Node>(inner(Expr::Kind::Sub, {x, y}, "(" + x.str() + " - " + y.str() + ")")));
}

Expr operator-(const Expr& x) {
  return Expr(std::make_shared<const Expr::Node>(inner(Expr::Kind::Neg, {x}, "-" + x.str())));
}

Expr operator*(const Expr& x, const Expr& y) {
  return Expr(std::make_shared<const Expr::Node>(inner(Expr::Kind::Mul, {x, y}, x.str() + "*" + y.str())));
}

Expr operator*(std::int64_t k, const Expr& x) {
  auto n = inner(Expr::Kind::Scale, {x}, std::to_string(k) + "*" + x.str());
  n.ints = {k};
  return Expr(std::make_shared<const Expr::Node>(std::move(n)));
}

Expr pow(const Expr& x, int e) {
  if (e < 0) throw DomainError("negative power");
  auto n = inner(Expr::Kind::Pow, {x}, x.str() + "^" + std::to_string(e));
  n.ints = {e};
  return Expr(std::make_shared<const Expr::Node>(std::move(n)));
}

Expr operator/(const Expr& x, const Expr& y) {
  return Expr(std::make_shared<const Expr::Node>(inner(Expr::Kind::Div, {x, y}, "(" + x.str() + ")/(" + y.str() + ")")));
}

Expr dilate(const Expr& x, int k) {
  requirePositive(k, "dilate");
  auto n = inner(Expr::Kind::Dilate, {x}, "[" + x.str() + "](q^" + std::to_string(k) + ")");
  n.ints = {k};
  return Expr(std::make_shared<const Expr::Node>(std::move(n)));
}

Expr alternate(const Expr& x) {
  return Expr(std::make_shared<const Expr::Node>(inner(Expr::Kind::Alternate, {x}, "[" + x.str() + "](-q)")));
}

Expr sift(const Expr& x, int t, int s) {
  const SiftSpec spec(t, s);
  auto n = inner(Expr::Kind::Sift, {x}, "S[" + std::to_string(t) + "," + std::to_string(s) + "](" + x.str() + ")");
  n.ints = {spec.t, spec.s};
  return Expr(std::make_shared<const Expr::Node>(std::move(n)));
}

Expr legendreTwist(const Expr& x, std::int64_t p) {
  if (!isPrime(p) || p == 2) throw DomainError("twist needs an odd prime");
  auto n = inner(Expr::Kind::LegendreTwist, {x}, "twist[" + std::to_string(p) + "](" + x.str() + ")");
  n.ints = {p};
  return Expr(std::make_shared<const Expr::Node>(std::move(n)));
}

QSeries Evaluator::eval(const Expr& e, int trunc) {
  if (trunc < 0) throw DomainError("negative truncation order");
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(e.str());
    if (it != cache_.end() && it->second.trunc() >= trunc) return it->second.truncated(trunc);
  }
  QSeries value = compute(e, trunc);
  std::lock_guard lock(mutex_);
  auto [it, fresh] = cache_.try_emplace(e.str(), value);
  if (!fresh && it->second.trunc() < trunc) it->second = value;
  return value;
}

void Evaluator::clear() {
  std::lock_guard lock(mutex_);
  cache_.clear();
}

QSeries Evaluator::compute(const Expr& e, int n) {
  const Expr::Node& node = e.node();
  const auto& ch = node.children;
  switch (node.kind) {
    case Expr::Kind::Constant:
      return QSeries::monomial(0, n, node.ints[0]);
    case Expr::Kind::Monomial:
      return QSeries::monomial(static_cast<int>(node.ints[0]), n, node.ints[1]);
    case Expr::Kind::Phi:
      return phi(n, static_cast<int>(node.ints[0]));
    case Expr::Kind::Psi:
      return psi(n, static_cast<int>(node.ints[0]));
    case Expr::Kind::ThetaF:
      return thetaF(static_cast<int>(node.ints[0]), static_cast<int>(node.ints[1]), n);
    case Expr::Kind::EulerE:
      return eulerE(static_cast<int>(node.ints[0]), n);
    case Expr::Kind::Product:
      return scale(prodAP(node.factors, n), node.ints[0]);
    case Expr::Kind::BinaryTheta:
      return thetaSeriesBinary(node.binary, n);
    case Expr::Kind::TernaryTheta:
      return thetaSeriesTernary(node.ternary, n);
    case Expr::Kind::ConstrainedBinary:
      return constrainedTheta(node.binary, *node.constraint, n);
    case Expr::Kind::ConstrainedTernary:
      return constrainedTheta(node.ternary, *node.constraint, n);
    case Expr::Kind::ThreeSquares: {
      const SumOfThreeSquares table(n);
      std::vector<QSeries::Coeff> c(static_cast<std::size_t>(n) + 1);
      for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = table(k);
      return QSeries(std::move(c));
    }
    case Expr::Kind::GenusTheta: {
      const std::int64_t p = node.ints[0], num = node.ints[2];
      const Genus g = node.ints[1] == 1 ? tg1(p) : tg2(p);
      QSeries sum = QSeries::zero(n);
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (num % g.autCounts[i] != 0)
          throw Error("weight " + std::to_string(num) + "/" + std::to_string(g.autCounts[i]) + " is not an integer");
        sum = add(sum, scale(thetaSeriesTernary(g.members[i], n), num / g.autCounts[i]));
      }
      return sum;
    }
    case Expr::Kind::Add:
      return add(eval(ch[0], n), eval(ch[1], n));
    case Expr::Kind::Sub:
      return sub(eval(ch[0], n), eval(ch[1], n));
    case Expr::Kind::Neg:
      return neg(eval(ch[0], n));
    case Expr::Kind::Scale:
      return scale(eval(ch[0], n), node.ints[0]);
    case Expr::Kind::Mul:
      return mul(eval(ch[0], n), eval(ch[1], n));
    case Expr::Kind::Pow:
      return pow(eval(ch[0], n), static_cast<int>(node.ints[0]));
    case Expr::Kind::Div:
      return divideExact(eval(ch[0], n), eval(ch[1], n));
    case Expr::Kind::Dilate: {
      const int k = static_cast<int>(node.ints[0]);
      return dilateTo(eval(ch[0], n / k), k, n);
    }
    case Expr::Kind::Alternate:
      return alternate(eval(ch[0], n));
    case Expr::Kind::Sift: {
      const int t = static_cast<int>(node.ints[0]), s = static_cast<int>(node.ints[1]);
      if (ch[0].kind() == Expr::Kind::ThreeSquares) {
        // Only the sifted coefficients are needed; a two-square table makes each O(sqrt n).
        const SumOfThreeSquares table(static_cast<std::int64_t>(t) * n + s);
        std::vector<QSeries::Coeff> c(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = table(static_cast<std::int64_t>(t) * k + s);
        return QSeries(std::move(c));
      }
      return sift(eval(ch[0], t * n + s), SiftSpec(t, s));
    }
    case Expr::Kind::LegendreTwist: {
      const std::int64_t p = node.ints[0];
      return twist(eval(ch[0], n), [p](int k) { return legendre(-static_cast<std::int64_t>(k), p); });
    }
  }
  throw Error("unknown expression kind");
}

}  // namespace ternary
