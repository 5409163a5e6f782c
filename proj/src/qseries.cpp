#include "ternary/qseries.hpp"

#include <string>

#include "ternary/kernels.hpp"

namespace ternary {

QSeries::QSeries(int trunc) {
  if (trunc < 0) throw DomainError("truncation order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(trunc) + 1, 0);
}

QSeries::QSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("a series needs at least the constant coefficient");
}

QSeries QSeries::one(int trunc) { return monomial(0, trunc); }

QSeries QSeries::monomial(int exponent, int trunc, Coeff c) {
  if (exponent < 0) throw DomainError("negative exponent in monomial");
  QSeries s(trunc);
  if (exponent <= trunc) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return s;
}

bool QSeries::isZero() const {
  for (Coeff c : coeffs_)
    if (c != 0) return false;
  return true;
}

QSeries QSeries::truncated(int n) const {
  if (n < 0 || n > trunc()) throw DomainError("cannot truncate to order " + std::to_string(n));
  return QSeries(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

SiftSpec::SiftSpec(int modulus, int residue) : t(modulus), s(residue) {
  if (t <= 0 || s < 0 || s >= t) throw DomainError("sift needs 0 <= s < t");
}

namespace {

void requireOrder(int trunc) {
  if (trunc < 0) throw DomainError("truncation order must be non-negative");
}

void requireSameOrder(const QSeries& a, const QSeries& b) {
  if (a.trunc() != b.trunc()) throw TruncationMismatch(a.trunc(), b.trunc());
}

std::vector<QSeries::Coeff> copy(const QSeries& a) { return {a.coeffs().begin(), a.coeffs().end()}; }

// In-place multiplication by (1 + sign q^m)^e; negative e divides.
void applyBinomial(std::vector<QSeries::Coeff>& c, int m, int sign, int e) {
  const int n = static_cast<int>(c.size()) - 1;
  if (m > n) return;
  for (int rep = 0; rep < (e > 0 ? e : -e); ++rep) {
    if (e > 0) {
      for (int i = n; i >= m; --i)
        c[i] = sign > 0 ? checked::add(c[i], c[i - m]) : checked::sub(c[i], c[i - m]);
    } else {
      for (int i = m; i <= n; ++i)
        c[i] = sign > 0 ? checked::sub(c[i], c[i - m]) : checked::add(c[i], c[i - m]);
    }
  }
}

}  // namespace

QSeries add(const QSeries& a, const QSeries& b) {
  requireSameOrder(a, b);
  auto c = copy(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::add(c[i], b.coeffs()[i]);
  return QSeries(std::move(c));
}

QSeries sub(const QSeries& a, const QSeries& b) {
  requireSameOrder(a, b);
  auto c = copy(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::sub(c[i], b.coeffs()[i]);
  return QSeries(std::move(c));
}

QSeries neg(const QSeries& a) { return scale(a, -1); }

QSeries scale(const QSeries& a, QSeries::Coeff k) {
  auto c = copy(a);
  for (auto& x : c) x = checked::mul(x, k);
  return QSeries(std::move(c));
}

QSeries mul(const QSeries& a, const QSeries& b) {
  requireSameOrder(a, b);
  return QSeries(kernels::convolve(a.coeffs(), b.coeffs(), a.trunc()));
}

QSeries pow(const QSeries& a, int k) {
  if (k < 0) throw DomainError("negative power; use divideExact");
  QSeries result = QSeries::one(a.trunc());
  QSeries base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

QSeries divideExact(const QSeries& a, const QSeries& b) {
  requireSameOrder(a, b);
  const QSeries::Coeff lead = b[0];
  if (lead != 1 && lead != -1) throw DomainError("divisor must have constant term +1 or -1");
  const int n = a.trunc();
  std::vector<QSeries::Coeff> q(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> nz;
  for (int i = 1; i <= n; ++i)
    if (b[i] != 0) nz.push_back(i);
  for (int k = 0; k <= n; ++k) {
    QSeries::Coeff r = a[k];
    for (int i : nz) {
      if (i > k) break;
      r = checked::sub(r, checked::mul(b[i], q[k - i]));
    }
    q[k] = lead == 1 ? r : checked::mul(r, -1);
  }
  return QSeries(std::move(q));
}

QSeries dilate(const QSeries& a, int k) { return dilateTo(a, k, a.trunc()); }

QSeries dilateTo(const QSeries& a, int k, int trunc) {
  if (k <= 0) throw DomainError("dilation factor must be positive");
  if (a.trunc() < trunc / k) throw DomainError("series too short to dilate to order " + std::to_string(trunc));
  requireOrder(trunc);
  std::vector<QSeries::Coeff> c(static_cast<std::size_t>(trunc) + 1, 0);
  for (int j = 0; j * k <= trunc; ++j) c[static_cast<std::size_t>(j) * k] = a[j];
  return QSeries(std::move(c));
}

QSeries alternate(const QSeries& a) {
  auto c = copy(a);
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = checked::mul(c[i], -1);
  return QSeries(std::move(c));
}

QSeries sift(const QSeries& a, SiftSpec spec) {
  const int n = a.trunc();
  if (n < spec.s) throw DomainError("series too short to sift");
  const int outTrunc = (n - spec.s) / spec.t;
  std::vector<QSeries::Coeff> c(static_cast<std::size_t>(outTrunc) + 1);
  for (int k = 0; k <= outTrunc; ++k) c[k] = a[spec.t * k + spec.s];
  return QSeries(std::move(c));
}

QSeries phi(int trunc, int k) {
  if (k <= 0) throw DomainError("phi needs a positive dilation");
  requireOrder(trunc);
  std::vector<QSeries::Coeff> c(static_cast<std::size_t>(trunc) + 1, 0);
  c[0] = 1;
  for (std::int64_t n = 1; k * n * n <= trunc; ++n) c[k * n * n] += 2;
  return QSeries(std::move(c));
}

QSeries psi(int trunc, int k) {
  if (k <= 0) throw DomainError("psi needs a positive dilation");
  requireOrder(trunc);
  std::vector<QSeries::Coeff> c(static_cast<std::size_t>(trunc) + 1, 0);
  for (std::int64_t n = 0; k * n * (n + 1) / 2 <= trunc; ++n) c[k * n * (n + 1) / 2] += 1;
  return QSeries(std::move(c));
}

QSeries eulerE(int k, int trunc) {
  if (k <= 0) throw DomainError("eulerE needs a positive step");
  const APFactor f{k, k, -1, 1};
  return prodAP(std::span<const APFactor>(&f, 1), trunc);
}

QSeries prodAP(std::span<const APFactor> factors, int trunc) {
  QSeries init = QSeries::one(trunc);
  std::vector<QSeries::Coeff> c = copy(init);
  for (const APFactor& f : factors) {
    if (f.step <= 0 || f.offset < 0 || (f.sign != 1 && f.sign != -1) || f.exponent == 0)
      throw DomainError("invalid arithmetic-progression factor");
    if (f.offset == 0) throw DomainError("factor with exponent 0 term (offset 0) is not allowed");
    for (std::int64_t m = f.offset; m <= trunc; m += f.step) applyBinomial(c, static_cast<int>(m), f.sign, f.exponent);
  }
  return QSeries(std::move(c));
}

QSeries thetaF(int r, int s, int trunc) {
  if (r <= 0 || s <= 0) throw DomainError("thetaF needs positive r and s");
  requireOrder(trunc);
  std::vector<QSeries::Coeff> c(static_cast<std::size_t>(trunc) + 1, 0);
  // The exponent r n(n-1)/2 + s n(n+1)/2 grows in |n| on both sides.
  for (int dir : {1, -1}) {
    for (std::int64_t n = (dir > 0 ? 0 : -1);; n += dir) {
      const std::int64_t e = r * (n * (n - 1) / 2) + s * (n * (n + 1) / 2);
      if (e > trunc) break;
      c[static_cast<std::size_t>(e)] += 1;
    }
  }
  return QSeries(std::move(c));
}

QSeries thetaFProduct(int r, int s, int trunc) {
  if (r <= 0 || s <= 0) throw DomainError("thetaFProduct needs positive r and s");
  const int m = r + s;
  const APFactor factors[] = {{m, r, +1, 1}, {m, s, +1, 1}, {m, m, -1, 1}};
  return prodAP(factors, trunc);
}

}  // namespace ternary
