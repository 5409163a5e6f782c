#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "ternary/form.hpp"
#include "ternary/qseries.hpp"

namespace ternary {

/// a m^2 + b m n + c n^2 + u m + v n + w. The quadratic part must be positive
/// definite; the affine part (u, v, w) defaults to zero.
struct BinaryFormExt {
  std::int64_t a = 0, b = 0, c = 0;
  std::int64_t u = 0, v = 0, w = 0;

  std::int64_t operator()(std::int64_t m, std::int64_t n) const {
    return a * m * m + b * m * n + c * n * n + u * m + v * n + w;
  }
  bool isPositiveDefinite() const { return a > 0 && b * b - 4 * a * c < 0; }
  bool isAffine() const { return u != 0 || v != 0 || w != 0; }
};

/// Residue condition on the summation variables: a point is kept when its
/// coordinates reduced mod `modulus` form one of the allowed tuples.
class Constraint {
 public:
  Constraint(int modulus, int arity, std::set<std::vector<int>> allowed);
  /// Tuples built from a predicate over residues.
  template <class Pred>
  static Constraint fromPredicate(int modulus, int arity, Pred&& pred);

  int modulus() const { return modulus_; }
  int arity() const { return arity_; }
  bool accepts(std::span<const std::int64_t> point) const;

 private:
  int modulus_;
  int arity_;
  std::vector<char> table_;  // modulus^arity flags
};

template <class Pred>
Constraint Constraint::fromPredicate(int modulus, int arity, Pred&& pred) {
  std::set<std::vector<int>> allowed;
  std::vector<int> t(static_cast<std::size_t>(arity), 0);
  while (true) {
    if (pred(std::as_const(t))) allowed.insert(t);
    int i = 0;
    while (i < arity && ++t[i] == modulus) t[i++] = 0;
    if (i == arity) break;
  }
  return Constraint(modulus, arity, std::move(allowed));
}

/// Exact number of integer triples with F(x,y,z) = n. Zero for negative n.
std::int64_t repCountTernary(const TernaryForm& f, std::int64_t n);
/// Rational argument num/den: zero unless it is a non-negative integer.
std::int64_t repCountTernary(const TernaryForm& f, std::int64_t num, std::int64_t den);

QSeries thetaSeriesTernary(const TernaryForm& f, int trunc);
QSeries thetaSeriesBinary(const BinaryFormExt& b, int trunc);
QSeries constrainedTheta(const TernaryForm& f, const Constraint& c, int trunc);
QSeries constrainedTheta(const BinaryFormExt& b, const Constraint& c, int trunc);

/// Number of representations of n as a sum of three squares.
std::int64_t sOfN(std::int64_t n);
/// s(num/den) with the non-integer convention.
std::int64_t sOfN(std::int64_t num, std::int64_t den);

/// s(n) for all 0 <= n <= limit, built from a table of two-square counts.
class SumOfThreeSquares {
 public:
  explicit SumOfThreeSquares(std::int64_t limit);
  std::int64_t limit() const { return limit_; }
  /// s(n); zero for n < 0. Throws if n exceeds the limit.
  std::int64_t operator()(std::int64_t n) const;

 private:
  std::int64_t limit_;
  std::vector<std::int32_t> r2_;
};

}  // namespace ternary
