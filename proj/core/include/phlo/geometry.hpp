#pragma once

#include <array>
#include <cstdint>
#include <cstddef>

// Flat R^4 with coordinates (x, y, z, xi), xi = c*t, metric diag(-1,-1,-1,+1),
// orientation fixed by the volume form dx^dy^dz^dxi.

namespace phlo {

inline constexpr int kDim = 4;

enum Axis : int { AX = 0, AY = 1, AZ = 2, AXI = 3 };

// Diagonal metric entries; eta^{ii} coincides with eta_{ii}.
inline constexpr std::array<double, 4> kEta = {-1.0, -1.0, -1.0, +1.0};

struct Point4 {
  double x{0.0}, y{0.0}, z{0.0}, xi{0.0};

  double operator[](int i) const {
    switch (i) {
      case AX: return x;
      case AY: return y;
      case AZ: return z;
      default: return xi;
    }
  }
  double& operator[](int i) {
    switch (i) {
      case AX: return x;
      case AY: return y;
      case AZ: return z;
      default: return xi;
    }
  }
};

using Vec4 = std::array<double, 4>;

// Rows index the output (contravariant) slot, columns the input: (M v)^r = sum_c M[r][c] v^c.
using Mat4 = std::array<std::array<double, 4>, 4>;

inline Mat4 mat4_zero() { return Mat4{}; }

inline Mat4 mat4_identity() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

inline Vec4 mat4_apply(const Mat4& m, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

struct Box4 {
  Vec4 lo{-2.0, -2.0, -2.0, -2.0};
  Vec4 hi{+2.0, +2.0, +2.0, +2.0};
};

}  // namespace phlo
