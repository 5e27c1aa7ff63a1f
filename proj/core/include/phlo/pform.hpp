#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "phlo/geometry.hpp"

// Antisymmetric forms over R^4 stored on strictly increasing index tuples.
// Degrees 0..4 hold 1, 4, 6, 4, 1 components.

namespace phlo {

inline constexpr std::array<int, 5> kCompCount = {1, 4, 6, 4, 1};

inline constexpr std::array<std::array<int, 2>, 6> kPairs = {{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline constexpr std::array<std::array<int, 3>, 4> kTriples = {{
    {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

int pair_index(int i, int j);      // requires i < j
int triple_index(int i, int j, int k);  // requires i < j < k

// Sign of the permutation sorting idx ascending; 0 if any repeats. n <= 4.
int perm_sign(const int* idx, int n);

// Increasing index tuple stored at (degree, slot); entries beyond the degree
// are -1. Inverse lookup expects a sorted tuple.
const int* tuple_of(int degree, int slot);
int slot_of(int degree, const int* sorted_idx);

struct PForm {
  int degree{0};
  std::array<double, 6> comp{};  // first kCompCount[degree] entries used

  static PForm zero(int degree) {
    PForm f;
    f.degree = degree;
    return f;
  }
  int count() const { return kCompCount[degree]; }
};

PForm operator+(const PForm& a, const PForm& b);
PForm operator-(const PForm& a, const PForm& b);
PForm operator*(double s, const PForm& a);
PForm operator*(const PForm& a, double s);

// Fully antisymmetric component a_{idx...}; handles unsorted tuples and repeats.
double component(const PForm& a, const int* idx, int n);

PForm wedge(const PForm& a, const PForm& b);

// Star of the metric diag(-1,-1,-1,+1) with orientation dx^dy^dz^dxi:
// (*a)_J = sign(J^c, J) * eta^{JJ} * a_{J^c}.
PForm hodge(const PForm& a);

// Contraction of v into the first slot.
PForm interior(const Vec4& v, const PForm& a);

// Index raising/lowering with the diagonal metric (spatial sign flip).
Vec4 raise(const PForm& one_form);
PForm lower(const Vec4& v);

// F_{mu nu} G^{mu nu}, full antisymmetric sum.
double invariant_contraction(const PForm& f2, const PForm& g2);

// One-form with components F^{ab} H_{ab mu} (full antisymmetric sum over a,b).
PForm flux_contraction(const PForm& f2, const PForm& h3);

// a(v1, ..., vp) for degree p = number of supplied vectors (1..4).
double apply(const PForm& a, const Vec4* vs, int n);

// Pullback through the tangent map m: (m*a)(v1,..,vp) = a(m v1, .., m vp).
PForm pullback(const PForm& a, const Mat4& m);

// Human-readable basis label, e.g. "dx^dz" for degree 2 component 1.
std::string comp_name(int degree, int k);

inline double metric_vv(const Vec4& a, const Vec4& b) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += kEta[i] * a[i] * b[i];
  return s;
}

inline double pairing(const PForm& one_form, const Vec4& v) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += one_form.comp[i] * v[i];
  return s;
}

}  // namespace phlo
