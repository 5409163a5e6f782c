#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ternary {

using Mat3 = std::array<std::array<std::int64_t, 3>, 3>;

/// a x^2 + b y^2 + c z^2 + d yz + e zx + f xy.
///
/// The associated even Gram matrix is [[2a,f,e],[f,2b,d],[e,d,2c]], so that
/// F(v) = v^T G v / 2.
struct TernaryForm {
  std::int64_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  std::int64_t operator()(std::int64_t x, std::int64_t y, std::int64_t z) const {
    return a * x * x + b * y * y + c * z * z + d * y * z + e * z * x + f * x * y;
  }

  Mat3 gram() const { return {{{2 * a, f, e}, {f, 2 * b, d}, {e, d, 2 * c}}}; }
  static TernaryForm fromGram(const Mat3& g);

  /// Half the determinant of the even Gram matrix.
  std::int64_t discriminant() const {
    return 4 * a * b * c + d * e * f - a * d * d - b * e * e - c * f * f;
  }
  bool isPositiveDefinite() const {
    return a > 0 && 4 * a * b - f * f > 0 && discriminant() > 0;
  }

  std::array<std::int64_t, 6> tuple() const { return {a, b, c, d, e, f}; }
  std::string str() const;

  friend auto operator<=>(const TernaryForm&, const TernaryForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const TernaryForm& f);

std::int64_t det3(const Mat3& m);
Mat3 transpose(const Mat3& m);
Mat3 operator*(const Mat3& x, const Mat3& y);
inline Mat3 identity3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

}  // namespace ternary
