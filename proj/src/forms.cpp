#include "ternary/forms.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <string>

#include "ternary/error.hpp"
#include "ternary/kernels.hpp"

namespace ternary {

UnimodularTransform::UnimodularTransform(const Mat3& m) : m_(m) {
  const std::int64_t d = det3(m);
  if (d != 1 && d != -1) throw DomainError("transform has determinant " + std::to_string(d));
}

UnimodularTransform UnimodularTransform::inverse() const {
  const Mat3& m = m_;
  const std::int64_t d = det();
  Mat3 inv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = d * (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]);
    }
  return UnimodularTransform(inv);
}

TernaryForm applyTransform(const TernaryForm& f, const UnimodularTransform& u) {
  return TernaryForm::fromGram(transpose(u.matrix()) * f.gram() * u.matrix());
}

std::int64_t discriminant(const TernaryForm& f) {
  const std::int64_t det = det3(f.gram());
  if (det % 2 != 0) throw Error("odd Gram determinant for " + f.str());
  return det / 2;
}

namespace {

using Vec3 = std::array<std::int64_t, 3>;

struct ShortVector {
  Vec3 v;
  std::int64_t norm;
  Vec3 gv;  // G v
};

std::int64_t dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Mat3 fromColumns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  return {{{c0[0], c1[0], c2[0]}, {c0[1], c1[1], c2[1]}, {c0[2], c1[2], c2[2]}}};
}

Mat3 congruence(const Mat3& g, const Mat3& t) { return transpose(t) * g * t; }

// Pairwise size reduction until no basis vector can be shortened by an
// integer multiple of another; returns the change of basis.
Mat3 preReduce(Mat3& g) {
  Mat3 basis = identity3();
  bool changed = true;
  while (changed) {
    changed = false;
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return g[x][x] < g[y][y]; });
    if (order != std::array<int, 3>{0, 1, 2}) {
      Mat3 p{};
      for (int k = 0; k < 3; ++k) p[order[k]][k] = 1;
      g = congruence(g, p);
      basis = basis * p;
    }
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) {
        if (i == j) continue;
        const std::int64_t mu = static_cast<std::int64_t>(kernels::floorDiv(2 * static_cast<__int128>(g[i][j]) + g[i][i], 2 * static_cast<__int128>(g[i][i])));
        if (mu == 0) continue;
        const std::int64_t newNorm = g[j][j] - 2 * mu * g[i][j] + mu * mu * g[i][i];
        if (newNorm >= g[j][j]) continue;
        Mat3 t = identity3();
        t[i][j] = -mu;
        g = congruence(g, t);
        basis = basis * t;
        changed = true;
      }
  }
  return basis;
}

std::vector<ShortVector> shortVectors(const Mat3& g, std::int64_t bound) {
  const TernaryForm f = TernaryForm::fromGram(g);
  std::vector<ShortVector> out;
  kernels::TernaryBox(f, bound).visit([&](std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t v) {
    if (v == 0) return;
    const Vec3 p{x, y, z};
    Vec3 gv{};
    for (int r = 0; r < 3; ++r) gv[r] = g[r][0] * x + g[r][1] * y + g[r][2] * z;
    out.push_back({p, v, gv});
  });
  std::sort(out.begin(), out.end(), [](const ShortVector& l, const ShortVector& r) {
    return l.norm != r.norm ? l.norm < r.norm : l.v < r.v;
  });
  return out;
}

// Successive minima from vectors sorted by norm.
std::array<std::int64_t, 3> successiveMinima(const std::vector<ShortVector>& sv) {
  std::array<std::int64_t, 3> lambda{};
  std::vector<Vec3> kept;
  for (const auto& s : sv) {
    bool independent = false;
    if (kept.empty()) independent = true;
    else if (kept.size() == 1) independent = cross(kept[0], s.v) != Vec3{0, 0, 0};
    else independent = dot(cross(kept[0], kept[1]), s.v) != 0;
    if (independent) {
      lambda[kept.size()] = s.norm;
      kept.push_back(s.v);
      if (kept.size() == 3) return lambda;
    }
  }
  throw Error("short vector set does not span the lattice");
}

using Key = std::array<std::int64_t, 9>;

Key keyOf(const TernaryForm& f) {
  return {f.a, f.b, f.c, std::abs(f.d), std::abs(f.e), std::abs(f.f), -f.d, -f.e, -f.f};
}

std::vector<const ShortVector*> withNorm(const std::vector<ShortVector>& sv, std::int64_t n) {
  std::vector<const ShortVector*> out;
  for (const auto& s : sv)
    if (s.norm == n) out.push_back(&s);
  return out;
}

}  // namespace

Reduction canonicalize(const TernaryForm& f) {
  if (!f.isPositiveDefinite()) throw DomainError("form " + f.str() + " is not positive definite");
  Mat3 g = f.gram();
  const Mat3 pre = preReduce(g);
  const std::int64_t bound = std::max({g[0][0], g[1][1], g[2][2]}) / 2;
  const auto sv = shortVectors(g, bound);
  const auto lambda = successiveMinima(sv);
  const auto first = withNorm(sv, lambda[0]), second = withNorm(sv, lambda[1]), third = withNorm(sv, lambda[2]);

  bool found = false;
  Key best{};
  TernaryForm bestForm;
  Mat3 bestBasis{};
  for (const ShortVector* v1 : first)
    for (const ShortVector* v2 : second) {
      const Vec3 n12 = cross(v1->v, v2->v);
      if (n12 == Vec3{0, 0, 0}) continue;
      const std::int64_t fxy = dot(v1->v, v2->gv);
      for (const ShortVector* v3 : third) {
        const std::int64_t det = dot(n12, v3->v);
        if (det != 1 && det != -1) continue;
        const TernaryForm cand{lambda[0], lambda[1], lambda[2], dot(v2->v, v3->gv), dot(v1->v, v3->gv), fxy};
        const Key k = keyOf(cand);
        if (!found || k < best) {
          found = true;
          best = k;
          bestForm = cand;
          bestBasis = fromColumns(v1->v, v2->v, v3->v);
        }
      }
    }
  if (!found) throw Error("no basis realises the successive minima of " + f.str());
  return {bestForm, UnimodularTransform(pre * bestBasis)};
}

std::optional<UnimodularTransform> equivalent(const TernaryForm& f, const TernaryForm& g) {
  if (f.discriminant() != g.discriminant()) return std::nullopt;
  const Reduction rf = canonicalize(f), rg = canonicalize(g);
  if (rf.form != rg.form) return std::nullopt;
  return rf.basis * rg.basis.inverse();
}

std::vector<UnimodularTransform> automorphs(const TernaryForm& f) {
  const Reduction r = canonicalize(f);
  const Mat3 g = r.form.gram();
  const auto sv = shortVectors(g, r.form.c);
  const auto sa = withNorm(sv, r.form.a), sb = withNorm(sv, r.form.b), sc = withNorm(sv, r.form.c);
  const UnimodularTransform binv = r.basis.inverse();
  std::vector<UnimodularTransform> out;
  for (const ShortVector* u1 : sa)
    for (const ShortVector* u2 : sb) {
      if (dot(u1->v, u2->gv) != g[0][1]) continue;
      for (const ShortVector* u3 : sc) {
        if (dot(u1->v, u3->gv) != g[0][2] || dot(u2->v, u3->gv) != g[1][2]) continue;
        // Gram matrix preserved, so the determinant is +-1.
        const UnimodularTransform w(fromColumns(u1->v, u2->v, u3->v));
        out.push_back(r.basis * w * binv);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t automorphCount(const TernaryForm& f) { return static_cast<std::int64_t>(automorphs(f).size()); }

bool isPrimitive(const TernaryForm& f) {
  std::int64_t g = 0;
  for (std::int64_t x : f.tuple()) g = std::gcd(g, x);
  return g == 1;
}

std::vector<TernaryForm> enumerateClasses(std::int64_t disc, bool primitiveOnly) {
  if (disc < 1) throw DomainError("discriminant must be positive");
  auto cands = kernels::classCandidates(disc);
  if (primitiveOnly) std::erase_if(cands, [](const TernaryForm& f) { return !isPrimitive(f); });
  std::vector<TernaryForm> reduced(cands.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < cands.size(); ++i) reduced[i] = reduceForm(cands[i]);
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  return reduced;
}

std::vector<BinaryClass> binaryClasses(std::int64_t disc) {
  if (disc >= 0) throw DomainError("binary classes need a negative discriminant");
  std::vector<BinaryClass> out;
  for (std::int64_t a = 1; 3 * a * a <= -disc; ++a)
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      out.push_back({a, b, c});
    }
  std::sort(out.begin(), out.end());
  return out;
}

TernaryForm liftBinaryToTernary(const BinaryClass& b, std::int64_t p) {
  if (b.discriminant() != -p) throw DomainError("binary form discriminant is not -p");
  if (p % 4 != 3) throw DomainError("binary lift needs p = 3 mod 4");
  const TernaryForm t{4 * b.a, p, 4 * b.c, 0, 4 * std::abs(b.b), 0};
  if (t.discriminant() != 16 * p * p) throw Error("lifted form " + t.str() + " has discriminant != 16p^2");
  return t;
}

bool isPrime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int legendre(std::int64_t a, std::int64_t p) {
  if (p < 3 || p % 2 == 0 || !isPrime(p)) throw DomainError("legendre needs an odd prime, got " + std::to_string(p));
  std::int64_t base = a % p;
  if (base < 0) base += p;
  if (base == 0) return 0;
  std::int64_t r = 1, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * base % p);
    base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % p);
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace ternary
