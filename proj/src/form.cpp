#include "ternary/form.hpp"

#include <ostream>
#include <sstream>

#include "ternary/error.hpp"

namespace ternary {

TernaryForm TernaryForm::fromGram(const Mat3& g) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (g[i][j] != g[j][i]) throw DomainError("Gram matrix is not symmetric");
  if (g[0][0] % 2 || g[1][1] % 2 || g[2][2] % 2) throw DomainError("Gram matrix diagonal must be even");
  return {g[0][0] / 2, g[1][1] / 2, g[2][2] / 2, g[1][2], g[0][2], g[0][1]};
}

std::string TernaryForm::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TernaryForm& f) {
  return os << '(' << f.a << ',' << f.b << ',' << f.c << ',' << f.d << ',' << f.e << ',' << f.f << ')';
}

std::int64_t det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 transpose(const Mat3& m) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < 3; ++k) s = checked::add(s, checked::mul(x[i][k], y[k][j]));
      r[i][j] = s;
    }
  return r;
}

}  // namespace ternary
