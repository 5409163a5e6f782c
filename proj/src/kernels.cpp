#include "ternary/kernels.hpp"

#include <algorithm>
#include <atomic>

namespace ternary::kernels {

Coeffs convolveSerial(std::span<const std::int64_t> a, std::span<const std::int64_t> b, int trunc) {
  Coeffs out(static_cast<std::size_t>(trunc) + 1, 0);
  for (int i = 0; i <= trunc && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= trunc && j < static_cast<int>(b.size()); ++j) {
      if (!checked::muladd(out[i + j], a[i], b[j])) throw OverflowError("int64 overflow in series product");
    }
  }
  return out;
}

namespace {

std::vector<int> support(std::span<const std::int64_t> a, int trunc) {
  std::vector<int> nz;
  for (int i = 0; i <= trunc && i < static_cast<int>(a.size()); ++i)
    if (a[i] != 0) nz.push_back(i);
  return nz;
}

}  // namespace

Coeffs convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b, int trunc) {
  std::vector<int> na = support(a, trunc), nb = support(b, trunc);
  if (na.size() > nb.size()) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  Coeffs out(static_cast<std::size_t>(trunc) + 1, 0);
  const int bLen = static_cast<int>(b.size());
  std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(static)
  for (int k = 0; k <= trunc; ++k) {
    std::int64_t acc = 0;
    for (int i : na) {
      if (i > k) break;
      const int j = k - i;
      if (j >= bLen || b[j] == 0) continue;
      if (!checked::muladd(acc, a[i], b[j])) {
        overflow.store(true, std::memory_order_relaxed);
        break;
      }
    }
    out[k] = acc;
  }
  if (overflow.load()) throw OverflowError("int64 overflow in series product");
  return out;
}

std::int64_t isqrt(__int128 v) {
  if (v < 0) throw DomainError("isqrt of a negative value");
  auto r = static_cast<__int128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return static_cast<std::int64_t>(r);
}

TernaryBox::TernaryBox(const TernaryForm& form, std::int64_t n) : n_(n) {
  if (!form.isPositiveDefinite()) throw DomainError("form " + form.str() + " is not positive definite");
  const Mat3 g = form.gram();
  // Sweep last the variable whose complementary 2x2 minor is smallest.
  int outer = 2;
  __int128 best = -1;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const __int128 minor = static_cast<__int128>(g[j][j]) * g[k][k] - static_cast<__int128>(g[j][k]) * g[j][k];
    if (best < 0 || minor < best) {
      best = minor;
      outer = i;
    }
  }
  perm_ = {(outer + 1) % 3, (outer + 2) % 3, outer};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) g_[r][c] = g[perm_[r]][perm_[c]];

  const __int128 det = det3(g);
  outerMax_ = n < 0 ? -1 : isqrt(floorDiv(2 * static_cast<__int128>(n) * best, det));
  const __int128 g00 = g_[0][0], g01 = g_[0][1], g02 = g_[0][2];
  p_ = g00 * g_[1][1] - g01 * g01;
  r_ = g00 * g_[1][2] - g01 * g02;
  s_ = g00 * g_[2][2] - g02 * g02;
}

std::vector<TernaryForm> classCandidates(std::int64_t disc) {
  std::vector<std::int64_t> leads;
  for (std::int64_t a = 1; a * a * a <= disc; ++a) leads.push_back(a);
  std::vector<std::vector<TernaryForm>> perLead(leads.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t li = 0; li < leads.size(); ++li) {
    const std::int64_t a = leads[li];
    auto& found = perLead[li];
    for (std::int64_t b = a; a * b * b <= disc; ++b) {
      for (std::int64_t f = -a; f <= a; ++f) {
        const std::int64_t den = 4 * a * b - f * f;
        for (std::int64_t e = -a; e <= a; ++e) {
          for (std::int64_t d = -b; d <= b; ++d) {
            // disc = c (4ab - f^2) - a d^2 - b e^2 + d e f
            const std::int64_t num = disc + a * d * d + b * e * e - d * e * f;
            if (num % den != 0) continue;
            const std::int64_t c = num / den;
            if (c < b || a * b * c > disc) continue;
            found.push_back({a, b, c, d, e, f});
          }
        }
      }
    }
  }
  std::vector<TernaryForm> out;
  for (auto& v : perLead) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TernaryForm> classCandidatesSerial(std::int64_t disc) {
  std::vector<TernaryForm> out;
  for (std::int64_t a = 1; a * a * a <= disc; ++a)
    for (std::int64_t b = a; a * b * b <= disc; ++b)
      for (std::int64_t c = b; a * b * c <= disc; ++c)
        for (std::int64_t d = -b; d <= b; ++d)
          for (std::int64_t e = -a; e <= a; ++e)
            for (std::int64_t f = -a; f <= a; ++f) {
              const TernaryForm t{a, b, c, d, e, f};
              if (t.discriminant() == disc) out.push_back(t);
            }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ternary::kernels
