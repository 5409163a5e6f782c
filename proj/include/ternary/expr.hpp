#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ternary/form.hpp"
#include "ternary/lattice.hpp"
#include "ternary/qseries.hpp"

namespace ternary {

/// Expression tree over series constructors. Leaves are theta functions,
/// products and lattice theta series; inner nodes are ring operations and
/// the substitutions q -> q^k, q -> -q and sifting. Trees are immutable and
/// cheap to copy.
class Expr {
 public:
  enum class Kind {
    Constant,
    Monomial,
    Phi,
    Psi,
    ThetaF,
    EulerE,
    Product,
    BinaryTheta,
    TernaryTheta,
    ConstrainedBinary,
    ConstrainedTernary,
    ThreeSquares,
    GenusTheta,
    Add,
    Sub,
    Neg,
    Scale,
    Mul,
    Pow,
    Div,
    Dilate,
    Alternate,
    Sift,
    LegendreTwist,
  };

  static Expr constant(std::int64_t c);
  /// c q^e.
  static Expr monomial(int e, std::int64_t c = 1);
  /// phi(q^k), psi(q^k).
  static Expr phi(int k = 1);
  static Expr psi(int k = 1);
  /// f(q^r, q^s).
  static Expr thetaF(int r, int s);
  /// E(q^k).
  static Expr eulerE(int k = 1);
  /// c * prod of the APFactor families.
  static Expr product(std::vector<APFactor> factors, std::int64_t c = 1);
  static Expr binary(const BinaryFormExt& b);
  static Expr ternary(const TernaryForm& f);
  /// `label` names the residue condition in the printed expression.
  static Expr constrained(const BinaryFormExt& b, const Constraint& c, const std::string& label);
  static Expr constrained(const TernaryForm& f, const Constraint& c, const std::string& label);
  /// sum s(n) q^n computed from lattice counts (not from phi).
  static Expr threeSquares();
  /// sum over the genus TG1 (which = 1) or TG2 (which = 2) of (numerator / |Aut f|) theta_f.
  static Expr genusTheta(std::int64_t p, int which, std::int64_t numerator);

  friend Expr operator+(const Expr& x, const Expr& y);
  friend Expr operator-(const Expr& x, const Expr& y);
  friend Expr operator-(const Expr& x);
  friend Expr operator*(const Expr& x, const Expr& y);
  friend Expr operator*(std::int64_t k, const Expr& x);
  friend Expr pow(const Expr& x, int n);
  friend Expr operator/(const Expr& x, const Expr& y);
  friend Expr dilate(const Expr& x, int k);
  friend Expr alternate(const Expr& x);
  /// S_{t,s}.
  friend Expr sift(const Expr& x, int t, int s);
  /// Coefficient of q^n multiplied by (-n | p).
  friend Expr legendreTwist(const Expr& x, std::int64_t p);

  Kind kind() const;
  const std::string& str() const;

  struct Node;
  const Node& node() const { return *node_; }

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Kind kind;
  std::vector<Expr> children;
  std::vector<std::int64_t> ints;
  std::vector<APFactor> factors;
  TernaryForm ternary;
  BinaryFormExt binary;
  std::optional<Constraint> constraint;
  std::string repr;
};

/// Evaluates expressions to a truncation order, memoising every subtree by its
/// printed form. A subtree evaluated at order M also answers requests for any
/// order N <= M. Safe to share between threads.
class Evaluator {
 public:
  QSeries eval(const Expr& e, int trunc);
  void clear();

 private:
  QSeries compute(const Expr& e, int trunc);

  std::mutex mutex_;
  std::map<std::string, QSeries> cache_;
};

}  // namespace ternary
