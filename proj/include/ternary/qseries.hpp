#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ternary/error.hpp"

namespace ternary {

/// Truncated formal power series in q with exact int64 coefficients.
///
/// A series of truncation order N stores the coefficients of q^0 .. q^N; every
/// exponent above N is unknown and discarded. Values are immutable: all
/// operations return fresh series. Binary operations require equal orders.
class QSeries {
 public:
  using Coeff = std::int64_t;

  explicit QSeries(int trunc);
  explicit QSeries(std::vector<Coeff> coeffs);

  static QSeries zero(int trunc) { return QSeries(trunc); }
  static QSeries one(int trunc);
  static QSeries monomial(int exponent, int trunc, Coeff c = 1);

  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of q^k; throws DomainError outside 0..trunc().
  Coeff operator[](int k) const {
    if (k < 0 || k > trunc()) throw DomainError("coefficient index outside the truncation order");
    return coeffs_[static_cast<std::size_t>(k)];
  }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  bool isZero() const;
  /// Keeps exponents 0..n; n must not exceed trunc().
  QSeries truncated(int n) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Coeff> coeffs_;
};

/// A residue pair (t, s) selecting the exponents t*k + s.
struct SiftSpec {
  int t;
  int s;
  SiftSpec(int modulus, int residue);
};

/// One factor family prod_{j>=0} (1 + sign*q^(step*j + offset))^exponent.
struct APFactor {
  int step;
  int offset;
  int sign;
  int exponent;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries neg(const QSeries& a);
QSeries scale(const QSeries& a, QSeries::Coeff k);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries pow(const QSeries& a, int k);

/// Q with mul(Q, b) == a to the common order; b must have constant term +-1.
QSeries divideExact(const QSeries& a, const QSeries& b);

/// q^j -> q^(j*k), keeping the same truncation order.
QSeries dilate(const QSeries& a, int k);
/// q^j -> q^(j*k) at order `trunc`; requires a.trunc() >= trunc / k.
QSeries dilateTo(const QSeries& a, int k, int trunc);
/// q -> -q.
QSeries alternate(const QSeries& a);
/// Coefficient k of the result is coefficient t*k + s of the input.
QSeries sift(const QSeries& a, SiftSpec spec);
/// Multiplies the coefficient of q^n by w(n) for an arbitrary integer weight.
template <class Weight>
QSeries twist(const QSeries& a, Weight&& w) {
  std::vector<QSeries::Coeff> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = checked::mul(c[n], w(static_cast<int>(n)));
  return QSeries(std::move(c));
}

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator-(const QSeries& a) { return neg(a); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(QSeries::Coeff k, const QSeries& a) { return scale(a, k); }

// Theta functions and products.

/// phi(q^k) = sum over integers n of q^(k n^2).
QSeries phi(int trunc, int k = 1);
/// psi(q^k) = sum over n >= 0 of q^(k n(n+1)/2).
QSeries psi(int trunc, int k = 1);
/// E(q^k) = prod_{j>=1} (1 - q^(k j)).
QSeries eulerE(int k, int trunc);
/// Expands a finite list of arithmetic-progression product factors.
QSeries prodAP(std::span<const APFactor> factors, int trunc);
/// f(q^r, q^s) as the bilateral sum of q^(r n(n-1)/2 + s n(n+1)/2).
QSeries thetaF(int r, int s, int trunc);
/// f(q^r, q^s) through the triple product (-q^r;q^(r+s))(-q^s;q^(r+s))(q^(r+s);q^(r+s)).
QSeries thetaFProduct(int r, int s, int trunc);

}  // namespace ternary
