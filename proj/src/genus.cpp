#include "ternary/genus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <string>

#include "ternary/forms.hpp"
#include "ternary/lattice.hpp"

namespace ternary {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Frac {
  i128 num = 0, den = 1;

  static Frac make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }
  bool isZero() const { return num == 0; }
  friend Frac operator+(Frac x, Frac y) { return make(x.num * y.den + y.num * x.den, x.den * y.den); }
  friend Frac operator-(Frac x, Frac y) { return make(x.num * y.den - y.num * x.den, x.den * y.den); }
  friend Frac operator*(Frac x, Frac y) { return make(x.num * y.num, x.den * y.den); }
  friend Frac operator/(Frac x, Frac y) { return make(x.num * y.den, x.den * y.num); }
};

int valuation(i128 n, std::int64_t p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int valuation(const Frac& x, std::int64_t p) { return valuation(x.num, p) - valuation(x.den, p); }

// (u | p) for the p-adic unit part of x.
int unitSign(const Frac& x, std::int64_t p) {
  i128 n = x.num, d = x.den;
  while (n % p == 0) n /= p;
  while (d % p == 0) d /= p;
  const i128 r = ((n % p) * (d % p)) % p;
  return legendre(static_cast<std::int64_t>(r), p);
}

std::vector<std::int64_t> primeFactors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

using M128 = std::array<std::array<i128, 3>, 3>;

// Smith normal form by row and column operations; only the column transform
// V (with U A V diagonal) is returned, along with the diagonal.
void smithColumns(M128 a, M128& v, std::array<i128, 3>& diag) {
  v = M128{};
  for (int i = 0; i < 3; ++i) v[i][i] = 1;
  auto swapCols = [&](int x, int y) {
    for (int r = 0; r < 3; ++r) {
      std::swap(a[r][x], a[r][y]);
      std::swap(v[r][x], v[r][y]);
    }
  };
  for (int t = 0; t < 3; ++t) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < 3; ++i)
        for (int j = t; j < 3; ++j)
          if (a[i][j] != 0 && (pi < 0 || abs128(a[i][j]) < abs128(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) throw Error("degenerate Gram matrix");
      std::swap(a[pi], a[t]);
      swapCols(pj, t);
      bool clean = true;
      for (int i = t + 1; i < 3; ++i) {
        const i128 q = a[i][t] / a[t][t];
        for (int c = 0; c < 3; ++c) a[i][c] -= q * a[t][c];
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < 3; ++j) {
        const i128 q = a[t][j] / a[t][t];
        for (int r = 0; r < 3; ++r) {
          a[r][j] -= q * a[r][t];
          v[r][j] -= q * v[r][t];
        }
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < 3 && bad < 0; ++i)
        for (int j = t + 1; j < 3; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int c = 0; c < 3; ++c) a[t][c] += a[bad][c];
    }
    diag[t] = abs128(a[t][t]);
  }
}

std::int64_t mod(i128 x, std::int64_t m) {
  i128 r = x % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

// Elements of a finite 2-group given by coefficient vectors over its cyclic factors.
struct Element {
  std::vector<std::int64_t> c;
  int orderExp;
  std::int64_t q;
};

std::vector<Element> elements(const DiscriminantForm2& d) {
  const std::int64_t w = std::int64_t{1} << (2 * d.vmax);
  const std::size_t k = d.exponents.size();
  std::vector<Element> out;
  std::vector<std::int64_t> c(k, 0);
  while (true) {
    i128 q = 0;
    for (std::size_t i = 0; i < k; ++i) {
      q += static_cast<i128>(c[i]) * c[i] * d.values[i][i];
      for (std::size_t j = i + 1; j < k; ++j) q += 2 * static_cast<i128>(c[i]) * c[j] * d.values[i][j];
    }
    int ord = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (c[i] == 0) continue;
      ord = std::max(ord, d.exponents[i] - valuation(c[i], 2));
    }
    out.push_back({c, ord, mod(q, 2 * w)});
    std::size_t pos = 0;
    while (pos < k) {
      if (++c[pos] < (std::int64_t{1} << d.exponents[pos])) break;
      c[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return out;
}

std::int64_t pairing(const DiscriminantForm2& d, const Element& x, const Element& y) {
  const std::int64_t w = std::int64_t{1} << (2 * d.vmax);
  i128 b = 0;
  for (std::size_t i = 0; i < x.c.size(); ++i)
    for (std::size_t j = 0; j < y.c.size(); ++j) b += static_cast<i128>(x.c[i]) * y.c[j] * d.values[i][j];
  return mod(b, w);
}

bool extend(const DiscriminantForm2& x, const DiscriminantForm2& y, const std::vector<Element>& ys,
            std::vector<const Element*>& images) {
  const std::size_t i = images.size();
  if (i == x.exponents.size()) return true;
  const std::int64_t w = std::int64_t{1} << (2 * x.vmax);
  for (const auto& cand : ys) {
    if (cand.orderExp > x.exponents[i] || cand.q != x.values[i][i]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) ok = pairing(y, cand, *images[j]) == mod(x.values[i][j], w);
    if (!ok) continue;
    images.push_back(&cand);
    if (extend(x, y, ys, images)) return true;
    images.pop_back();
  }
  return false;
}

struct Classified {
  std::vector<std::pair<std::int64_t, std::vector<JordanBlock>>> odd;
  DiscriminantForm2 two;
};

Classified classify(const TernaryForm& f) {
  Classified c;
  for (std::int64_t p : primeFactors(f.discriminant()))
    if (p != 2) c.odd.emplace_back(p, jordanSymbol(f, p));
  c.two = discriminantForm2(f);
  return c;
}

std::mutex gCacheMutex;
std::map<std::int64_t, std::vector<Genus>> gPartitionCache;

void requireOddPrime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw DomainError("p must be an odd prime, got " + std::to_string(p));
  if (!isPrime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

struct Matching {
  std::size_t count = 0;
  std::vector<std::size_t> first;
};

void countMatchings(const std::vector<std::vector<std::size_t>>& cand, std::vector<std::size_t>& cur,
                    std::vector<bool>& used, Matching& m, std::size_t limit) {
  if (m.count >= limit) return;
  const std::size_t i = cur.size();
  if (i == cand.size()) {
    if (m.count++ == 0) m.first = cur;
    return;
  }
  for (std::size_t j : cand[i]) {
    if (used[j]) continue;
    used[j] = true;
    cur.push_back(j);
    countMatchings(cand, cur, used, m, limit);
    cur.pop_back();
    used[j] = false;
  }
}

// Bijections upper -> lower, up to `limit` of them; throws SelectionError when
// some member of `upper` breaks the vanishing condition.
Matching matchings(const Genus& upper, const Genus& lower, int maxN, std::size_t limit) {
  Matching m;
  if (upper.size() != lower.size()) return m;
  std::vector<QSeries> up, low;
  for (const auto& f : upper.members) up.push_back(thetaSeriesTernary(f, 4 * maxN));
  for (const auto& g : lower.members) low.push_back(thetaSeriesTernary(g, maxN));
  for (std::size_t i = 0; i < up.size(); ++i)
    for (int n = 1; n <= maxN; ++n)
      if ((n % 4 == 1 || n % 4 == 2) && up[i][n] != 0)
        throw SelectionError(upper.members[i].str() + " represents " + std::to_string(n) + ", which is 1 or 2 mod 4");
  std::vector<std::vector<std::size_t>> cand(up.size());
  for (std::size_t i = 0; i < up.size(); ++i)
    for (std::size_t j = 0; j < low.size(); ++j) {
      if (upper.autCounts[i] != lower.autCounts[j]) continue;
      bool ok = true;
      for (int n = 0; n <= maxN && ok; ++n) ok = up[i][4 * n] == low[j][n];
      if (ok) cand[i].push_back(j);
    }
  std::vector<std::size_t> cur;
  std::vector<bool> used(low.size(), false);
  countMatchings(cand, cur, used, m, limit);
  return m;
}

}  // namespace

std::vector<JordanBlock> jordanSymbol(const TernaryForm& f, std::int64_t p) {
  requireOddPrime(p);
  const Mat3 g = f.gram();
  std::array<std::array<Frac, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = Frac::make(g[i][j], 1);
  std::vector<int> live{0, 1, 2};
  std::vector<Frac> diagonal;
  while (!live.empty()) {
    int bi = -1, bj = -1, best = 0;
    for (int i : live)
      for (int j : live) {
        if (m[i][j].isZero()) continue;
        const int v = valuation(m[i][j], p);
        // Prefer diagonal pivots at equal valuation.
        if (bi < 0 || v < best || (v == best && i == j && bi != bj)) {
          bi = i;
          bj = j;
          best = v;
        }
      }
    if (bi < 0) throw Error("degenerate form " + f.str());
    if (bi != bj) {
      // e_i <- e_i + e_j makes the diagonal entry attain the minimal valuation.
      for (int k = 0; k < 3; ++k) m[bi][k] = m[bi][k] + m[bj][k];
      for (int k = 0; k < 3; ++k) m[k][bi] = m[k][bi] + m[k][bj];
    }
    const int i = bi;
    const Frac piv = m[i][i];
    for (int k : live) {
      if (k == i) continue;
      const Frac c = m[k][i] / piv;
      for (int l = 0; l < 3; ++l) m[k][l] = m[k][l] - c * m[i][l];
      for (int l = 0; l < 3; ++l) m[l][k] = m[l][k] - c * m[l][i];
    }
    diagonal.push_back(piv);
    live.erase(std::find(live.begin(), live.end(), i));
  }
  std::map<int, JordanBlock> blocks;
  for (const Frac& d : diagonal) {
    const int v = valuation(d, p);
    auto [it, fresh] = blocks.try_emplace(v, JordanBlock{v, 0, 1});
    it->second.dim += 1;
    it->second.sign *= unitSign(d, p);
  }
  std::vector<JordanBlock> out;
  for (const auto& [v, b] : blocks) out.push_back(b);
  return out;
}

DiscriminantForm2 discriminantForm2(const TernaryForm& f) {
  const Mat3 g = f.gram();
  M128 a, v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = g[i][j];
  std::array<i128, 3> s{};
  smithColumns(a, v, s);
  // M = V^T G V
  M128 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) m[i][j] += v[k][i] * a[k][l] * v[l][j];
  std::vector<int> idx, ex;
  for (int i = 0; i < 3; ++i) {
    const int e = valuation(s[i], 2);
    if (e > 0) {
      idx.push_back(i);
      ex.push_back(e);
    }
  }
  // SNF diagonal divides successively, so exponents are already nondecreasing.
  DiscriminantForm2 d;
  d.exponents = ex;
  d.vmax = ex.empty() ? 0 : ex.back();
  const std::int64_t w = std::int64_t{1} << (2 * d.vmax);
  const std::size_t k = idx.size();
  d.values.assign(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const int shift = 2 * d.vmax - ex[i] - ex[j];
      const i128 val = m[idx[i]][idx[j]] * (i128{1} << shift);
      d.values[i][j] = i == j ? mod(val, 2 * w) : mod(val, w);
    }
  return d;
}

bool isometric(const DiscriminantForm2& x, const DiscriminantForm2& y) {
  if (x.exponents != y.exponents) return false;
  const auto ys = elements(y);
  std::vector<const Element*> images;
  return extend(x, y, ys, images);
}

bool sameGenus(const TernaryForm& f, const TernaryForm& g) {
  if (f.discriminant() != g.discriminant()) return false;
  if (!f.isPositiveDefinite() || !g.isPositiveDefinite()) throw DomainError("genus comparison needs positive definite forms");
  const Classified cf = classify(f), cg = classify(g);
  return cf.odd == cg.odd && isometric(cf.two, cg.two);
}

bool Genus::contains(const TernaryForm& f) const {
  return std::binary_search(members.begin(), members.end(), reduceForm(f));
}

std::vector<std::int64_t> Genus::weights48() const {
  std::vector<std::int64_t> out;
  for (std::int64_t a : autCounts) {
    if (48 % a != 0) throw Error("automorph count " + std::to_string(a) + " does not divide 48");
    out.push_back(48 / a);
  }
  return out;
}

std::vector<Genus> genusPartition(std::int64_t disc) {
  {
    std::lock_guard lock(gCacheMutex);
    auto it = gPartitionCache.find(disc);
    if (it != gPartitionCache.end()) return it->second;
  }
  const auto classes = enumerateClasses(disc, true);
  std::vector<Classified> info(classes.size());
  std::vector<std::int64_t> auts(classes.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < classes.size(); ++i) {
    info[i] = classify(classes[i]);
    auts[i] = automorphCount(classes[i]);
  }
  std::vector<Genus> out;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::size_t g = 0;
    for (; g < out.size(); ++g) {
      const Classified& r = info[reps[g]];
      if (r.odd == info[i].odd && isometric(r.two, info[i].two)) break;
    }
    if (g == out.size()) {
      out.push_back(Genus{disc, {}, {}});
      reps.push_back(i);
    }
    out[g].members.push_back(classes[i]);
    out[g].autCounts.push_back(auts[i]);
  }
  std::lock_guard lock(gCacheMutex);
  gPartitionCache.emplace(disc, out);
  return out;
}

Genus genusOf(const TernaryForm& f) {
  const TernaryForm r = reduceForm(f);
  for (const auto& g : genusPartition(f.discriminant()))
    if (std::binary_search(g.members.begin(), g.members.end(), r)) return g;
  if (!isPrimitive(f)) throw DomainError("genus lookup needs a primitive form, got " + f.str());
  throw Error("class " + f.str() + " missing from the enumeration of discriminant " + std::to_string(f.discriminant()));
}

Genus tg1(std::int64_t p) {
  requireOddPrime(p);
  auto parts = genusPartition(p * p);
  if (parts.size() != 1)
    throw SelectionError("discriminant " + std::to_string(p * p) + " splits into " + std::to_string(parts.size()) +
                         " genera");
  return parts.front();
}

std::optional<TernaryForm> tg2Seed(std::int64_t p) {
  requireOddPrime(p);
  std::optional<TernaryForm> seed;
  if (p % 4 == 3) {
    seed = liftBinaryToTernary({1, 1, (p + 1) / 4}, p);
  } else if (p % 3 == 2) {
    const std::int64_t m = (4 * p + 1) / 3;
    seed = TernaryForm{3, m, m, 1 - m, 2, 2};
  } else if (p % 8 == 5) {
    seed = TernaryForm{8, (p + 1) / 2, p + 2, 2, 8, 4};
  }
  if (seed && (!seed->isPositiveDefinite() || seed->discriminant() != 16 * p * p))
    throw Error("seed " + seed->str() + " does not have discriminant 16p^2");
  return seed;
}

std::vector<Genus> qualifyingGenera(std::int64_t p, int maxN) {
  const Genus lower = tg1(p);
  std::vector<Genus> out;
  for (const auto& g : genusPartition(16 * p * p)) {
    if (g.size() != lower.size()) continue;
    try {
      if (matchings(g, lower, maxN, 1).count > 0) out.push_back(g);
    } catch (const SelectionError&) {
    }
  }
  return out;
}

Genus tg2(std::int64_t p) {
  if (auto seed = tg2Seed(p)) return genusOf(*seed);
  auto q = qualifyingGenera(p, 500);
  if (q.empty()) throw SelectionError("no genus of discriminant " + std::to_string(16 * p * p) + " has the signature properties");
  if (q.size() > 1)
    throw SelectionError(std::to_string(q.size()) + " genera of discriminant " + std::to_string(16 * p * p) +
                         " have the signature properties");
  return q.front();
}

std::vector<HPair> findBijection(const Genus& upper, const Genus& lower, int maxN) {
  if (upper.size() != lower.size())
    throw SelectionError("genera have different sizes " + std::to_string(upper.size()) + " and " +
                         std::to_string(lower.size()));
  const Matching m = matchings(upper, lower, maxN, 2);
  if (m.count == 0) throw SelectionError("no bijection matches the theta series up to " + std::to_string(maxN));
  if (m.count > 1) throw SelectionError("several bijections match the theta series up to " + std::to_string(maxN));
  std::vector<HPair> out;
  for (std::size_t i = 0; i < upper.size(); ++i) out.push_back({upper.members[i], lower.members[m.first[i]]});
  return out;
}

std::vector<HPair> findH(std::int64_t p, int maxN) { return findBijection(tg2(p), tg1(p), maxN); }

}  // namespace ternary
