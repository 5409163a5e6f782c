#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ternary/form.hpp"

namespace ternary {

/// 3x3 integer matrix of determinant +-1 acting on forms by G -> U^T G U.
class UnimodularTransform {
 public:
  explicit UnimodularTransform(const Mat3& m);
  static UnimodularTransform identity() { return UnimodularTransform(identity3()); }

  const Mat3& matrix() const { return m_; }
  std::int64_t det() const { return det3(m_); }
  UnimodularTransform inverse() const;

  friend UnimodularTransform operator*(const UnimodularTransform& x, const UnimodularTransform& y) {
    return UnimodularTransform(x.m_ * y.m_);
  }
  friend bool operator==(const UnimodularTransform&, const UnimodularTransform&) = default;
  friend auto operator<=>(const UnimodularTransform&, const UnimodularTransform&) = default;

 private:
  Mat3 m_;
};

/// The form with Gram matrix U^T G U.
TernaryForm applyTransform(const TernaryForm& f, const UnimodularTransform& u);

std::int64_t discriminant(const TernaryForm& f);

/// Canonical class representative together with the change of basis that
/// produces it: applyTransform(input, basis) == form.
struct Reduction {
  TernaryForm form;
  UnimodularTransform basis;
};

/// The canonical member of the class of `f`.
///
/// Among all bases (v1, v2, v3) whose norms are the successive minima of the
/// lattice, picks the one whose form is smallest under the key
/// (a, b, c, |d|, |e|, |f|, -d, -e, -f). In rank 3 such bases always exist, so
/// the choice depends only on the class.
Reduction canonicalize(const TernaryForm& f);
inline TernaryForm reduceForm(const TernaryForm& f) { return canonicalize(f).form; }

/// U with applyTransform(f, U) == g, if the forms are equivalent.
std::optional<UnimodularTransform> equivalent(const TernaryForm& f, const TernaryForm& g);

/// All integral automorphs (determinant +1 and -1) of f.
std::vector<UnimodularTransform> automorphs(const TernaryForm& f);
std::int64_t automorphCount(const TernaryForm& f);

/// Canonical representatives of every positive definite class of the given
/// discriminant, sorted. With `primitiveOnly`, classes whose coefficients share
/// a common factor are dropped.
std::vector<TernaryForm> enumerateClasses(std::int64_t disc, bool primitiveOnly = false);

/// gcd(a, b, c, d, e, f) == 1.
bool isPrimitive(const TernaryForm& f);

/// a x^2 + b x z + c z^2.
struct BinaryClass {
  std::int64_t a, b, c;
  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  friend auto operator<=>(const BinaryClass&, const BinaryClass&) = default;
};

/// Reduced positive definite binary forms of (negative) discriminant `disc`.
std::vector<BinaryClass> binaryClasses(std::int64_t disc);

/// 4a x^2 + p y^2 + 4c z^2 + 4|b| xz for b^2 - 4ac = -p, p = 3 mod 4.
TernaryForm liftBinaryToTernary(const BinaryClass& b, std::int64_t p);

bool isPrime(std::int64_t n);
/// Legendre symbol (a|p) for an odd prime p, by Euler's criterion.
int legendre(std::int64_t a, std::int64_t p);

}  // namespace ternary
