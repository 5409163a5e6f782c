#pragma once

// Hot loops shared by the series and lattice engines. Each parallel kernel has
// a serial reference that follows a deliberately different, simpler route;
// the test suite checks them against each other and bench/ times them.

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ternary/error.hpp"
#include "ternary/form.hpp"

namespace ternary::kernels {

using Coeffs = std::vector<std::int64_t>;

/// Dense schoolbook Cauchy product truncated at `trunc`.
Coeffs convolveSerial(std::span<const std::int64_t> a, std::span<const std::int64_t> b, int trunc);
/// Cauchy product driven by the nonzero terms of the sparser factor; output
/// coefficients are computed independently in parallel.
Coeffs convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b, int trunc);

/// floor(sqrt(v)) for v >= 0, exact.
std::int64_t isqrt(__int128 v);
/// floor(n / d) and ceil(n / d) for d > 0.
inline __int128 floorDiv(__int128 n, __int128 d) { return n >= 0 ? n / d : -((-n + d - 1) / d); }
inline __int128 ceilDiv(__int128 n, __int128 d) { return -floorDiv(-n, d); }

/// Completed-square bounds for one positive definite ternary form.
///
/// Variables are permuted internally so that the outermost loop has the
/// shortest range. The nested integer ranges contain exactly the points with
/// F(v) <= n; no point is tested and discarded.
class TernaryBox {
 public:
  TernaryBox(const TernaryForm& form, std::int64_t n);

  /// Calls fn(x, y, z, value) for every point with value = F(x,y,z) <= n, in
  /// the original variable order. Only outermost slabs with index in
  /// [zBegin, zEnd) are visited; index 0 is the most negative coordinate.
  template <class Fn>
  void visitSlab(std::int64_t zBegin, std::int64_t zEnd, Fn&& fn) const;
  template <class Fn>
  void visit(Fn&& fn) const { visitSlab(0, outerCount(), fn); }

  std::int64_t outerCount() const { return outerMax_ < 0 ? 0 : 2 * outerMax_ + 1; }

 private:
  Mat3 g_;              // permuted even Gram matrix
  std::array<int, 3> perm_;  // perm_[k] = original index of permuted variable k
  std::int64_t n_;
  std::int64_t outerMax_;
  __int128 p_, r_, s_;  // y/z binary form after eliminating x
};

template <class Fn>
void TernaryBox::visitSlab(std::int64_t zBegin, std::int64_t zEnd, Fn&& fn) const {
  const __int128 g00 = g_[0][0], g01 = g_[0][1], g02 = g_[0][2];
  const __int128 g11 = g_[1][1], g12 = g_[1][2], g22 = g_[2][2];
  const __int128 twoN = 2 * static_cast<__int128>(n_);
  std::array<std::int64_t, 3> v{};
  for (std::int64_t zi = zBegin; zi < zEnd; ++zi) {
    const __int128 z = zi - outerMax_;
    // (p y + r z)^2 <= r^2 z^2 - p (s z^2 - 2 g00 n)
    const __int128 discY = r_ * r_ * z * z - p_ * (s_ * z * z - g00 * twoN);
    if (discY < 0) continue;
    const __int128 sy = isqrt(discY);
    const __int128 yLo = ceilDiv(-r_ * z - sy, p_), yHi = floorDiv(-r_ * z + sy, p_);
    for (__int128 y = yLo; y <= yHi; ++y) {
      const __int128 lin = g01 * y + g02 * z;
      const __int128 rest = g11 * y * y + 2 * g12 * y * z + g22 * z * z;
      // (g00 x + lin)^2 <= lin^2 - g00 (rest - 2n)
      const __int128 discX = lin * lin - g00 * (rest - twoN);
      if (discX < 0) continue;
      const __int128 sx = isqrt(discX);
      const __int128 xLo = ceilDiv(-lin - sx, g00), xHi = floorDiv(-lin + sx, g00);
      v[perm_[1]] = static_cast<std::int64_t>(y);
      v[perm_[2]] = static_cast<std::int64_t>(z);
      for (__int128 x = xLo; x <= xHi; ++x) {
        const __int128 twice = g00 * x * x + 2 * lin * x + rest;
        v[perm_[0]] = static_cast<std::int64_t>(x);
        fn(v[0], v[1], v[2], static_cast<std::int64_t>(twice / 2));
      }
    }
  }
}

/// Brute-force theta coefficients: loops over the per-coordinate bounding box
/// and keeps every point with F(v) <= n. Reference for thetaSweep.
template <class Filter>
Coeffs thetaSweepSerial(const TernaryForm& form, int n, Filter&& keep) {
  const Mat3 g = form.gram();
  const __int128 det = det3(g);
  Coeffs out(static_cast<std::size_t>(n) + 1, 0);
  std::array<std::int64_t, 3> bound{};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const __int128 minor = static_cast<__int128>(g[j][j]) * g[k][k] - static_cast<__int128>(g[j][k]) * g[j][k];
    bound[i] = isqrt(floorDiv(2 * static_cast<__int128>(n) * minor, det));
  }
  for (std::int64_t x = -bound[0]; x <= bound[0]; ++x)
    for (std::int64_t y = -bound[1]; y <= bound[1]; ++y)
      for (std::int64_t z = -bound[2]; z <= bound[2]; ++z) {
        const std::int64_t v = form(x, y, z);
        if (v <= n && keep(x, y, z)) ++out[static_cast<std::size_t>(v)];
      }
  return out;
}

/// Theta coefficients of a positive definite ternary form at order n, restricted
/// to points accepted by `keep`. Parallel over the outermost coordinate with
/// per-thread accumulators; exact integer merging makes the result independent
/// of scheduling.
template <class Filter>
Coeffs thetaSweep(const TernaryForm& form, int n, Filter&& keep) {
  const TernaryBox box(form, n);
  const std::int64_t count = box.outerCount();
  Coeffs out(static_cast<std::size_t>(n) + 1, 0);
#pragma omp parallel
  {
    Coeffs local(out.size(), 0);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t zi = 0; zi < count; ++zi) {
      box.visitSlab(zi, zi + 1, [&](std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t v) {
        if (keep(x, y, z)) ++local[static_cast<std::size_t>(v)];
      });
    }
#pragma omp critical
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += local[k];
  }
  return out;
}

inline Coeffs thetaSweep(const TernaryForm& form, int n) {
  return thetaSweep(form, n, [](std::int64_t, std::int64_t, std::int64_t) { return true; });
}
inline Coeffs thetaSweepSerial(const TernaryForm& form, int n) {
  return thetaSweepSerial(form, n, [](std::int64_t, std::int64_t, std::int64_t) { return true; });
}

/// All forms (a,b,c,d,e,f) of discriminant `disc` with a <= b <= c,
/// |f|, |e| <= a, |d| <= b and a*b*c <= disc. Every class has a Minkowski
/// reduced member in this set. Parallel over the leading coefficient; the
/// result is sorted.
std::vector<TernaryForm> classCandidates(std::int64_t disc);
/// Same set by direct search over (a, b, c, d, e, f) boxes; slow, for tests.
std::vector<TernaryForm> classCandidatesSerial(std::int64_t disc);

}  // namespace ternary::kernels
