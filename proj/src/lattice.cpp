#include "ternary/lattice.hpp"

#include <string>

#include "ternary/kernels.hpp"

namespace ternary {

using kernels::ceilDiv;
using kernels::floorDiv;
using kernels::isqrt;

Constraint::Constraint(int modulus, int arity, std::set<std::vector<int>> allowed)
    : modulus_(modulus), arity_(arity) {
  if (modulus <= 0 || arity <= 0 || arity > 3) throw DomainError("constraint needs modulus >= 1 and arity 1..3");
  std::size_t size = 1;
  for (int i = 0; i < arity; ++i) size *= static_cast<std::size_t>(modulus);
  table_.assign(size, 0);
  for (const auto& t : allowed) {
    if (static_cast<int>(t.size()) != arity) throw DomainError("constraint tuple has wrong arity");
    std::size_t idx = 0;
    for (int r : t) {
      if (r < 0 || r >= modulus) throw DomainError("constraint residue out of range");
      idx = idx * static_cast<std::size_t>(modulus) + static_cast<std::size_t>(r);
    }
    table_[idx] = 1;
  }
}

bool Constraint::accepts(std::span<const std::int64_t> point) const {
  std::size_t idx = 0;
  for (std::int64_t x : point) {
    std::int64_t r = x % modulus_;
    if (r < 0) r += modulus_;
    idx = idx * static_cast<std::size_t>(modulus_) + static_cast<std::size_t>(r);
  }
  return table_[idx] != 0;
}

std::int64_t repCountTernary(const TernaryForm& f, std::int64_t n) {
  if (n < 0) return 0;
  std::int64_t count = 0;
  kernels::TernaryBox(f, n).visit([&](std::int64_t, std::int64_t, std::int64_t, std::int64_t v) {
    if (v == n) ++count;
  });
  return count;
}

std::int64_t repCountTernary(const TernaryForm& f, std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if (num % den != 0) return 0;
  return repCountTernary(f, num / den);
}

QSeries thetaSeriesTernary(const TernaryForm& f, int trunc) {
  if (trunc < 0) throw DomainError("negative truncation order");
  return QSeries(kernels::thetaSweep(f, trunc));
}

QSeries constrainedTheta(const TernaryForm& f, const Constraint& c, int trunc) {
  if (c.arity() != 3) throw DomainError("ternary theta needs a constraint of arity 3");
  if (trunc < 0) throw DomainError("negative truncation order");
  return QSeries(kernels::thetaSweep(f, trunc, [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    const std::int64_t p[3] = {x, y, z};
    return c.accepts(p);
  }));
}

namespace {

// Visits every (m, n) with B(m, n) <= limit using completed squares:
// 4a B = (2am + bn + u)^2 + D n^2 + 2 beta n + (4aw - u^2), D = 4ac - b^2.
template <class Fn>
void visitBinary(const BinaryFormExt& f, std::int64_t limit, Fn&& fn) {
  if (!f.isPositiveDefinite()) throw DomainError("binary form is not positive definite");
  const __int128 a = f.a, b = f.b, c = f.c, u = f.u, v = f.v, w = f.w;
  const __int128 disc = 4 * a * c - b * b;
  const __int128 beta = 2 * a * v - b * u;
  const __int128 gamma = 4 * a * w - u * u - 4 * a * limit;
  // (disc n + beta)^2 <= beta^2 - disc gamma
  const __int128 dn = beta * beta - disc * gamma;
  if (dn < 0) return;
  const __int128 sn = isqrt(dn);
  const __int128 nLo = ceilDiv(-beta - sn, disc), nHi = floorDiv(-beta + sn, disc);
  for (__int128 n = nLo; n <= nHi; ++n) {
    const __int128 room = 4 * a * limit - (disc * n * n + 2 * beta * n + 4 * a * w - u * u);
    if (room < 0) continue;
    const __int128 sm = isqrt(room);
    const __int128 centre = -b * n - u;
    const __int128 mLo = ceilDiv(centre - sm, 2 * a), mHi = floorDiv(centre + sm, 2 * a);
    for (__int128 m = mLo; m <= mHi; ++m) {
      const auto mm = static_cast<std::int64_t>(m), nn = static_cast<std::int64_t>(n);
      fn(mm, nn, f(mm, nn));
    }
  }
}

template <class Keep>
QSeries binaryTheta(const BinaryFormExt& f, int trunc, Keep&& keep) {
  if (trunc < 0) throw DomainError("negative truncation order");
  std::vector<QSeries::Coeff> c(static_cast<std::size_t>(trunc) + 1, 0);
  visitBinary(f, trunc, [&](std::int64_t m, std::int64_t n, std::int64_t e) {
    if (e < 0) {
      throw DomainError("binary theta term with negative exponent " + std::to_string(e) + " at (" +
                        std::to_string(m) + "," + std::to_string(n) + ")");
    }
    if (keep(m, n)) ++c[static_cast<std::size_t>(e)];
  });
  return QSeries(std::move(c));
}

}  // namespace

QSeries thetaSeriesBinary(const BinaryFormExt& b, int trunc) {
  return binaryTheta(b, trunc, [](std::int64_t, std::int64_t) { return true; });
}

QSeries constrainedTheta(const BinaryFormExt& b, const Constraint& c, int trunc) {
  if (c.arity() != 2) throw DomainError("binary theta needs a constraint of arity 2");
  return binaryTheta(b, trunc, [&](std::int64_t m, std::int64_t n) {
    const std::int64_t p[2] = {m, n};
    return c.accepts(p);
  });
}

std::int64_t sOfN(std::int64_t n) {
  if (n < 0) return 0;
  std::int64_t count = 0;
  const std::int64_t xm = isqrt(n);
  for (std::int64_t x = -xm; x <= xm; ++x) {
    const std::int64_t r = n - x * x;
    const std::int64_t ym = isqrt(r);
    for (std::int64_t y = -ym; y <= ym; ++y) {
      const std::int64_t t = r - y * y;
      const std::int64_t z = isqrt(t);
      if (z * z == t) count += z == 0 ? 1 : 2;
    }
  }
  return count;
}

std::int64_t sOfN(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if (num % den != 0) return 0;
  return sOfN(num / den);
}

SumOfThreeSquares::SumOfThreeSquares(std::int64_t limit) : limit_(limit) {
  if (limit < 0) throw DomainError("negative limit");
  r2_.assign(static_cast<std::size_t>(limit) + 1, 0);
  const std::int64_t xm = isqrt(limit);
  for (std::int64_t x = -xm; x <= xm; ++x) {
    const std::int64_t ym = isqrt(limit - x * x);
    for (std::int64_t y = -ym; y <= ym; ++y) ++r2_[static_cast<std::size_t>(x * x + y * y)];
  }
}

std::int64_t SumOfThreeSquares::operator()(std::int64_t n) const {
  if (n < 0) return 0;
  if (n > limit_) throw DomainError("s(n) requested beyond table limit " + std::to_string(limit_));
  std::int64_t count = 0;
  const std::int64_t zm = isqrt(n);
  for (std::int64_t z = -zm; z <= zm; ++z) count += r2_[static_cast<std::size_t>(n - z * z)];
  return count;
}

}  // namespace ternary
