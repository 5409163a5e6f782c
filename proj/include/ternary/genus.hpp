#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ternary/error.hpp"
#include "ternary/form.hpp"

namespace ternary {

/// Raised when a genus construction does not single out exactly one answer.
class SelectionError : public Error {
 public:
  using Error::Error;
};

/// One constituent p^scale * U of a p-adic Jordan splitting, U unimodular of
/// dimension `dim` with determinant square class `sign` = (det U | p).
struct JordanBlock {
  int scale;
  int dim;
  int sign;
  friend auto operator<=>(const JordanBlock&, const JordanBlock&) = default;
};

/// Jordan symbol of the Gram matrix at an odd prime p, sorted by scale.
std::vector<JordanBlock> jordanSymbol(const TernaryForm& f, std::int64_t p);

/// 2-primary part of the discriminant form L#/L with q(x) = x^T G x mod 2.
struct DiscriminantForm2 {
  /// Exponents v_i of the cyclic factors Z/2^v_i, nondecreasing.
  std::vector<int> exponents;
  /// Gram values of the generators scaled by 2^(2 vmax): q(h_i) mod 2^(2 vmax + 1)
  /// on the diagonal, b(h_i, h_j) mod 2^(2 vmax) off it.
  std::vector<std::vector<std::int64_t>> values;
  int vmax = 0;
};

DiscriminantForm2 discriminantForm2(const TernaryForm& f);
bool isometric(const DiscriminantForm2& x, const DiscriminantForm2& y);

/// Local equivalence at every prime dividing 2D (both forms positive definite).
bool sameGenus(const TernaryForm& f, const TernaryForm& g);

struct Genus {
  std::int64_t discriminant = 0;
  /// Canonical representatives, sorted.
  std::vector<TernaryForm> members;
  std::vector<std::int64_t> autCounts;

  std::size_t size() const { return members.size(); }
  bool contains(const TernaryForm& f) const;
  /// 48 / |Aut| per member.
  std::vector<std::int64_t> weights48() const;
};

/// All primitive classes of discriminant D grouped into genera, ordered by
/// first member. Results are cached per discriminant.
std::vector<Genus> genusPartition(std::int64_t disc);
Genus genusOf(const TernaryForm& f);

/// The single genus of discriminant p^2.
Genus tg1(std::int64_t p);

/// Seed form of TG2 from the congruence nets, if p lies in one.
std::optional<TernaryForm> tg2Seed(std::int64_t p);

/// The genus of discriminant 16p^2 carrying the signature properties.
Genus tg2(std::int64_t p);

/// Genera of discriminant 16p^2 with |TG1| members, vanishing at m = 1,2 mod 4
/// and admitting a bijection onto TG1 (checked up to maxN).
std::vector<Genus> qualifyingGenera(std::int64_t p, int maxN = 500);

struct HPair {
  TernaryForm from;
  TernaryForm to;
  friend bool operator==(const HPair&, const HPair&) = default;
};

/// The unique bijection H: upper -> lower with |Aut f| = |Aut H(f)|,
/// R_f(4n) = R_H(f)(n) for n <= maxN and R_f(m) = 0 for m = 1,2 mod 4, m <= maxN.
/// Throws SelectionError when none or several exist.
std::vector<HPair> findBijection(const Genus& upper, const Genus& lower, int maxN);
std::vector<HPair> findH(std::int64_t p, int maxN = 500);

}  // namespace ternary
