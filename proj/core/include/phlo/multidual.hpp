#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

// Forward-mode automatic differentiation with four simultaneous seed
// directions, one per coordinate. Nesting MultiDual<MultiDual<double>> gives
// exact mixed second derivatives.

namespace phlo {

template <class T>
struct MultiDual {
  T v{};
  std::array<T, 4> d{};

  MultiDual() = default;
  MultiDual(double c) : v(c) {}  // NOLINT: implicit promotion of constants
  MultiDual(T value, std::array<T, 4> grad) : v(std::move(value)), d(std::move(grad)) {}
};

using D0 = double;
using D1 = MultiDual<double>;
using D2 = MultiDual<D1>;

// Innermost double, used for branch decisions (|t|<1, sign tests, zero checks).
inline double leading(double a) { return a; }
template <class T>
double leading(const MultiDual<T>& a) { return leading(a.v); }

template <class T>
MultiDual<T> operator+(const MultiDual<T>& a, const MultiDual<T>& b) {
  MultiDual<T> r;
  r.v = a.v + b.v;
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}
template <class T>
MultiDual<T> operator-(const MultiDual<T>& a, const MultiDual<T>& b) {
  MultiDual<T> r;
  r.v = a.v - b.v;
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}
template <class T>
MultiDual<T> operator-(const MultiDual<T>& a) {
  MultiDual<T> r;
  r.v = -a.v;
  for (int i = 0; i < 4; ++i) r.d[i] = -a.d[i];
  return r;
}
template <class T>
MultiDual<T> operator*(const MultiDual<T>& a, const MultiDual<T>& b) {
  MultiDual<T> r;
  r.v = a.v * b.v;
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}
template <class T>
MultiDual<T> operator/(const MultiDual<T>& a, const MultiDual<T>& b) {
  MultiDual<T> r;
  r.v = a.v / b.v;
  for (int i = 0; i < 4; ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) / b.v;
  return r;
}

template <class T> MultiDual<T> operator+(const MultiDual<T>& a, double c) { return a + MultiDual<T>(c); }
template <class T> MultiDual<T> operator+(double c, const MultiDual<T>& a) { return MultiDual<T>(c) + a; }
template <class T> MultiDual<T> operator-(const MultiDual<T>& a, double c) { return a - MultiDual<T>(c); }
template <class T> MultiDual<T> operator-(double c, const MultiDual<T>& a) { return MultiDual<T>(c) - a; }
template <class T> MultiDual<T> operator*(const MultiDual<T>& a, double c) { return a * MultiDual<T>(c); }
template <class T> MultiDual<T> operator*(double c, const MultiDual<T>& a) { return MultiDual<T>(c) * a; }
template <class T> MultiDual<T> operator/(const MultiDual<T>& a, double c) { return a / MultiDual<T>(c); }
template <class T> MultiDual<T> operator/(double c, const MultiDual<T>& a) { return MultiDual<T>(c) / a; }

using std::atan2;
using std::cos;
using std::exp;
using std::pow;
using std::sin;
using std::sqrt;

template <class T>
MultiDual<T> sin(const MultiDual<T>& a) {
  MultiDual<T> r;
  r.v = sin(a.v);
  T c = cos(a.v);
  for (int i = 0; i < 4; ++i) r.d[i] = c * a.d[i];
  return r;
}
template <class T>
MultiDual<T> cos(const MultiDual<T>& a) {
  MultiDual<T> r;
  r.v = cos(a.v);
  T s = -sin(a.v);
  for (int i = 0; i < 4; ++i) r.d[i] = s * a.d[i];
  return r;
}
template <class T>
MultiDual<T> exp(const MultiDual<T>& a) {
  MultiDual<T> r;
  r.v = exp(a.v);
  for (int i = 0; i < 4; ++i) r.d[i] = r.v * a.d[i];
  return r;
}
template <class T>
MultiDual<T> sqrt(const MultiDual<T>& a) {
  MultiDual<T> r;
  r.v = sqrt(a.v);
  T half_inv = 0.5 / r.v;
  for (int i = 0; i < 4; ++i) r.d[i] = half_inv * a.d[i];
  return r;
}
template <class T>
MultiDual<T> atan2(const MultiDual<T>& y, const MultiDual<T>& x) {
  MultiDual<T> r;
  r.v = atan2(y.v, x.v);
  T den = x.v * x.v + y.v * y.v;
  for (int i = 0; i < 4; ++i) r.d[i] = (x.v * y.d[i] - y.v * x.d[i]) / den;
  return r;
}

// Real exponent; base must be positive (callers enforce the domain).
template <class T>
MultiDual<T> pow(const MultiDual<T>& a, double e) {
  MultiDual<T> r;
  r.v = pow(a.v, e);
  T f = e * pow(a.v, e - 1.0);
  for (int i = 0; i < 4; ++i) r.d[i] = f * a.d[i];
  return r;
}

// Integer exponent via repeated multiplication; valid for any base.
template <class S>
S powi(const S& a, long long n) {
  if (n < 0) return 1.0 / powi(a, -n);
  S r = 1.0;
  S b = a;
  for (; n > 0; n >>= 1) {
    if (n & 1) r = r * b;
    if (n > 1) b = b * b;
  }
  return r;
}

// Smooth compactly supported profile: exp(-1/(1-t^2)) on |t|<1, 0 outside.
inline double bump(double t) {
  if (!(t > -1.0 && t < 1.0)) return 0.0;
  return std::exp(-1.0 / (1.0 - t * t));
}
template <class T>
MultiDual<T> bump(const MultiDual<T>& t) {
  double tv = leading(t);
  if (!(tv > -1.0 && tv < 1.0)) return MultiDual<T>(0.0);
  return exp(-1.0 / (1.0 - t * t));
}

// Same profile as a function of t^2, smooth in its argument; bump_sq(t*t) == bump(t).
inline double bump_sq(double s) {
  if (!(s < 1.0)) return 0.0;
  return std::exp(-1.0 / (1.0 - s));
}
template <class T>
MultiDual<T> bump_sq(const MultiDual<T>& s) {
  if (!(leading(s) < 1.0)) return MultiDual<T>(0.0);
  return exp(-1.0 / (1.0 - s));
}

// Seeds the coordinate value for axis `axis`: derivatives track that coordinate.
template <class S>
S seed_coordinate(double value, int axis);

template <>
inline double seed_coordinate<double>(double value, int) { return value; }
template <>
inline D1 seed_coordinate<D1>(double value, int axis) {
  D1 r(value);
  r.d[axis] = 1.0;
  return r;
}
template <>
inline D2 seed_coordinate<D2>(double value, int axis) {
  D2 r;
  r.v = seed_coordinate<D1>(value, axis);
  for (int j = 0; j < 4; ++j) r.d[j] = D1(j == axis ? 1.0 : 0.0);
  return r;
}

}  // namespace phlo
