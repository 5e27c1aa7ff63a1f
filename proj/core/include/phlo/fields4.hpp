#pragma once

#include <array>

#include "phlo/field.hpp"
#include "phlo/pform.hpp"

// Pointwise tensor objects lifted to field level: components are ScalarFields
// and every algebraic operation from pform.hpp has a graph-building twin here.

namespace phlo {

struct VectorField4 {
  std::array<ScalarField, 4> comp;

  Vec4 value(const Point4& pt) const {
    return {comp[0](pt), comp[1](pt), comp[2](pt), comp[3](pt)};
  }
};

struct PFormField {
  int degree{0};
  std::array<ScalarField, 6> comp;  // first kCompCount[degree] entries used

  int count() const { return kCompCount[degree]; }
  PForm value(const Point4& pt) const {
    PForm f = PForm::zero(degree);
    for (int k = 0; k < count(); ++k) f.comp[k] = comp[k](pt);
    return f;
  }
  static PFormField zero(int degree) {
    PFormField f;
    f.degree = degree;
    return f;
  }
};

// Mixed tensor, rows are the output slot: (T v)^r = sum_c m[r][c] v^c.
struct Tensor11Field {
  std::array<std::array<ScalarField, 4>, 4> m;

  Mat4 value(const Point4& pt) const {
    Mat4 out;
    for (int r = 0; r < kDim; ++r)
      for (int c = 0; c < kDim; ++c) out[r][c] = m[r][c](pt);
    return out;
  }
};

VectorField4 vector_zero();
VectorField4 constant_vector(const Vec4& v);
Tensor11Field tensor_zero();
Tensor11Field constant_tensor(const Mat4& mat);

VectorField4 operator+(const VectorField4& a, const VectorField4& b);
VectorField4 operator-(const VectorField4& a, const VectorField4& b);
VectorField4 operator-(const VectorField4& a);
VectorField4 operator*(const ScalarField& s, const VectorField4& a);

PFormField operator+(const PFormField& a, const PFormField& b);
PFormField operator-(const PFormField& a, const PFormField& b);
PFormField operator-(const PFormField& a);
PFormField operator*(const ScalarField& s, const PFormField& a);
inline PFormField operator*(double s, const PFormField& a) { return constant(s) * a; }

Tensor11Field operator+(const Tensor11Field& a, const Tensor11Field& b);
Tensor11Field operator-(const Tensor11Field& a, const Tensor11Field& b);
Tensor11Field operator*(const ScalarField& s, const Tensor11Field& a);
inline Tensor11Field operator*(double s, const Tensor11Field& a) { return constant(s) * a; }

// Signed antisymmetric component w_{idx...}; handles unsorted tuples and repeats.
ScalarField component_field(const PFormField& w, const int* idx, int n);

PFormField wedge(const PFormField& a, const PFormField& b);
PFormField hodge(const PFormField& a);
PFormField interior(const VectorField4& v, const PFormField& a);
VectorField4 raise(const PFormField& a);      // degree 1 only
PFormField lower(const VectorField4& v);
ScalarField invariant_contraction(const PFormField& f, const PFormField& g);
PFormField flux_contraction(const PFormField& f, const PFormField& h);

// Pullback of a form by the pointwise linear map; degrees 1 and 2 only.
PFormField pullback(const PFormField& a, const Tensor11Field& t);

VectorField4 apply(const Tensor11Field& t, const VectorField4& v);
Tensor11Field compose(const Tensor11Field& a, const Tensor11Field& b);  // a after b
Tensor11Field transpose(const Tensor11Field& t);
ScalarField trace(const Tensor11Field& t);

}  // namespace phlo
