#include "phlo/calculus.hpp"

#include <cassert>
#include <stdexcept>

namespace phlo {

PFormField exterior_derivative(const ScalarField& f, const DerivProvider& prov) {
  PFormField r = PFormField::zero(1);
  for (int i = 0; i < kDim; ++i) r.comp[i] = derivative(f, i, prov);
  return r;
}

PFormField exterior_derivative(const PFormField& w, const DerivProvider& prov) {
  int p = w.degree;
  if (p == 0) return exterior_derivative(w.comp[0], prov);
  if (p == 4) throw std::invalid_argument("exterior_derivative: degree 4 form");
  PFormField r = PFormField::zero(p + 1);
  for (int slot = 0; slot < kCompCount[p + 1]; ++slot) {
    const int* J = tuple_of(p + 1, slot);
    ScalarField s = constant(0.0);
    for (int k = 0; k <= p; ++k) {
      int rest[4];
      int n = 0;
      for (int j = 0; j <= p; ++j)
        if (j != k) rest[n++] = J[j];
      ScalarField dc = derivative(w.comp[slot_of(p, rest)], J[k], prov);
      s = (k % 2 == 0) ? s + dc : s - dc;
    }
    r.comp[slot] = s;
  }
  return r;
}

PFormField star_d_star(const PFormField& w, const DerivProvider& prov) {
  return hodge(exterior_derivative(hodge(w), prov));
}

ScalarField directional(const VectorField4& x, const ScalarField& f, const DerivProvider& prov) {
  bool const_dir = true;
  for (int nu = 0; nu < kDim; ++nu) const_dir = const_dir && x.comp[nu].is_constant();
  if (const_dir) {
    std::array<double, 4> dir;
    for (int nu = 0; nu < kDim; ++nu) dir[nu] = x.comp[nu].constant_value();
    return directional_constant(f, dir, prov);
  }
  ScalarField s = constant(0.0);
  for (int nu = 0; nu < kDim; ++nu) {
    if (x.comp[nu].is_zero()) continue;
    s = s + x.comp[nu] * derivative(f, nu, prov);
  }
  return s;
}

VectorField4 lie_bracket(const VectorField4& x, const VectorField4& y, const DerivProvider& prov) {
  VectorField4 r;
  for (int mu = 0; mu < kDim; ++mu)
    r.comp[mu] = directional(x, y.comp[mu], prov) - directional(y, x.comp[mu], prov);
  return r;
}

PFormField lie_derivative(const VectorField4& x, const PFormField& w, const DerivProvider& prov) {
  if (w.degree == 0) {
    PFormField r = PFormField::zero(0);
    r.comp[0] = directional(x, w.comp[0], prov);
    return r;
  }
  if (w.degree == 4) return exterior_derivative(interior(x, w), prov);
  return interior(x, exterior_derivative(w, prov)) +
         exterior_derivative(interior(x, w), prov);
}

Tensor11Field lie_derivative(const VectorField4& x, const Tensor11Field& t, const DerivProvider& prov) {
  // Output index nu lives on rows, input index mu on columns.
  Tensor11Field r;
  for (int nu = 0; nu < kDim; ++nu)
    for (int mu = 0; mu < kDim; ++mu) {
      ScalarField s = directional(x, t.m[nu][mu], prov);
      for (int sg = 0; sg < kDim; ++sg) {
        s = s - t.m[sg][mu] * derivative(x.comp[nu], sg, prov);
        s = s + t.m[nu][sg] * derivative(x.comp[sg], mu, prov);
      }
      r.m[nu][mu] = s;
    }
  return r;
}

}  // namespace phlo
