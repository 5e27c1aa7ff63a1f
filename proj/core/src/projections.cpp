#include "phlo/projections.hpp"

namespace phlo {

ProjectionSet build_projections(const ScalarField& u, const ScalarField& p, double eps) {
  ScalarField e = constant(eps);
  ProjectionSet s;

  // Rows are outputs: (V w)^r = sum_c m[r][c] w^c. Columns 0,1 restrict to the
  // identity on the x-y block, so idempotence is structural.
  s.v = tensor_zero();
  s.v.m[0][0] = constant(1.0);
  s.v.m[1][1] = constant(1.0);
  s.v.m[0][2] = -(e * u);
  s.v.m[0][3] = -u;
  s.v.m[1][2] = -(e * p);
  s.v.m[1][3] = -p;

  s.vt = tensor_zero();
  s.vt.m[0][0] = constant(1.0);
  s.vt.m[1][1] = constant(1.0);
  s.vt.m[0][2] = p;
  s.vt.m[0][3] = e * p;
  s.vt.m[1][2] = -u;
  s.vt.m[1][3] = -(e * u);

  Tensor11Field id = constant_tensor(mat4_identity());
  s.h = id - s.v;
  s.ht = id - s.vt;

  s.v_star = transpose(s.v);
  s.h_star = transpose(s.h);
  s.vt_star = transpose(s.vt);
  s.ht_star = transpose(s.ht);

  Mat4 v0 = mat4_zero();
  v0[0][0] = 1.0;
  v0[1][1] = 1.0;
  s.v0 = constant_tensor(v0);

  Mat4 j = mat4_zero();
  j[0][1] = -1.0;
  j[1][0] = 1.0;
  s.j = constant_tensor(j);

  return s;
}

PFormField apply_cotangent(const Tensor11Field& star, const PFormField& w) {
  return pullback(w, transpose(star));
}

}  // namespace phlo
