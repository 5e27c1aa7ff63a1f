#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "phlo/calculus.hpp"
#include "phlo/probes.hpp"

using namespace phlo;

namespace {

const DerivProvider kDual = DerivProvider::dual();

ScalarField x() { return coordinate(AX); }
ScalarField y() { return coordinate(AY); }
ScalarField z() { return coordinate(AZ); }
ScalarField xi() { return coordinate(AXI); }

double max_abs(const PFormField& w, const std::vector<Point4>& pts) {
  double m = 0.0;
  for (const Point4& pt : pts)
    for (int k = 0; k < w.count(); ++k) m = std::max(m, std::abs(w.comp[k](pt)));
  return m;
}

double max_abs(const VectorField4& v, const std::vector<Point4>& pts) {
  double m = 0.0;
  for (const Point4& pt : pts)
    for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(v.comp[k](pt)));
  return m;
}

double max_abs(const Tensor11Field& t, const std::vector<Point4>& pts) {
  double m = 0.0;
  for (const Point4& pt : pts)
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m = std::max(m, std::abs(t.m[r][c](pt)));
  return m;
}

// A smooth non-separable scalar exercising every coordinate.
ScalarField wavy() {
  return sin_field(x() * y()) + cos_field(z()) * xi() + constant(0.5) * x() * z();
}

PFormField smooth_two_form() {
  PFormField w = PFormField::zero(2);
  w.comp[0] = x() * y();                       // dx^dy
  w.comp[1] = sin_field(z());                  // dx^dz
  w.comp[2] = constant(2.0) * xi();            // dx^dxi
  w.comp[3] = cos_field(x());                  // dy^dz
  w.comp[4] = z() * z();                       // dy^dxi
  w.comp[5] = x() + xi();                      // dz^dxi
  return w;
}

VectorField4 smooth_vector(int variant) {
  VectorField4 v = vector_zero();
  if (variant == 0) {
    v.comp[0] = y();
    v.comp[1] = constant(-1.0) * x();
    v.comp[2] = sin_field(xi());
    v.comp[3] = constant(1.0);
  } else {
    v.comp[0] = z() * z();
    v.comp[1] = constant(0.5);
    v.comp[2] = x() * y();
    v.comp[3] = cos_field(z());
  }
  return v;
}

}  // namespace

TEST_CASE("exterior derivative of a scalar is its gradient one-form") {
  ScalarField f = wavy();
  PFormField df = exterior_derivative(f, kDual);
  REQUIRE(df.degree == 1);
  Point4 pt{0.3, -0.8, 1.1, 0.6};
  MultiDual<double> jet = f.jet1(pt);
  for (int axis = 0; axis < 4; ++axis)
    CHECK(df.comp[axis](pt) == doctest::Approx(jet.d[axis]).epsilon(1e-12));
}

TEST_CASE("d of d vanishes on scalars and one-forms") {
  std::vector<Point4> pts = halton_probes(200, Box4{}, 5);
  ScalarField f = wavy();
  PFormField ddf = exterior_derivative(exterior_derivative(f, kDual), kDual);
  CHECK(max_abs(ddf, pts) <= 1e-12);

  PFormField a = PFormField::zero(1);
  a.comp[0] = sin_field(y());
  a.comp[1] = x() * z();
  a.comp[2] = xi() * xi();
  a.comp[3] = cos_field(x() * y());
  PFormField dda = exterior_derivative(exterior_derivative(a, kDual), kDual);
  CHECK(max_abs(dda, pts) <= 1e-10);
}

TEST_CASE("exterior derivative satisfies the graded Leibniz rule") {
  std::vector<Point4> pts = halton_probes(100, Box4{}, 7);
  ScalarField f = sin_field(x() + z());
  PFormField w = smooth_two_form();
  PFormField lhs = exterior_derivative(f * w, kDual);
  PFormField rhs = wedge(exterior_derivative(f, kDual), w) + f * exterior_derivative(w, kDual);
  CHECK(max_abs(lhs - rhs, pts) <= 1e-10);
}

TEST_CASE("frozen codifferential example") {
  // w = z^2 dx^dz: *d*(w) = -2z dx.
  PFormField w = PFormField::zero(2);
  w.comp[pair_index(AX, AZ)] = z() * z();
  PFormField cw = star_d_star(w, kDual);
  REQUIRE(cw.degree == 1);
  for (const Point4& pt : halton_probes(50, Box4{}, 9)) {
    CHECK(cw.comp[AX](pt) == doctest::Approx(-2.0 * pt.z).epsilon(1e-12));
    CHECK(std::abs(cw.comp[AY](pt)) <= 1e-13);
    CHECK(std::abs(cw.comp[AZ](pt)) <= 1e-13);
    CHECK(std::abs(cw.comp[AXI](pt)) <= 1e-13);
  }
}

TEST_CASE("directional derivative contracts the gradient") {
  VectorField4 v = smooth_vector(0);
  ScalarField f = wavy();
  ScalarField vf = directional(v, f, kDual);
  for (const Point4& pt : halton_probes(50, Box4{}, 11)) {
    MultiDual<double> jet = f.jet1(pt);
    Vec4 vv = v.value(pt);
    double want = 0.0;
    for (int k = 0; k < 4; ++k) want += vv[k] * jet.d[k];
    CHECK(vf(pt) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("lie bracket matches its coordinate formula and satisfies Jacobi") {
  VectorField4 a = smooth_vector(0);
  VectorField4 b = smooth_vector(1);
  VectorField4 c = vector_zero();
  c.comp[0] = sin_field(z());
  c.comp[3] = x();

  std::vector<Point4> pts = halton_probes(60, Box4{}, 13);
  VectorField4 ab = lie_bracket(a, b, kDual);
  for (const Point4& pt : pts) {
    for (int mu = 0; mu < 4; ++mu) {
      double want = 0.0;
      for (int nu = 0; nu < 4; ++nu) {
        want += a.comp[nu](pt) * b.comp[mu].jet1(pt).d[nu];
        want -= b.comp[nu](pt) * a.comp[mu].jet1(pt).d[nu];
      }
      CHECK(ab.comp[mu](pt) == doctest::Approx(want).epsilon(1e-11));
    }
  }

  VectorField4 jac = lie_bracket(a, lie_bracket(b, c, kDual), kDual) +
                     lie_bracket(b, lie_bracket(c, a, kDual), kDual) +
                     lie_bracket(c, lie_bracket(a, b, kDual), kDual);
  // Inner brackets differentiate twice; tolerance reflects the fd fallback
  // used for second derivatives of derivative nodes.
  CHECK(max_abs(jac, pts) <= 1e-5);
}

TEST_CASE("Cartan formula equals the componentwise Lie derivative") {
  VectorField4 v = smooth_vector(0);
  PFormField w = smooth_two_form();
  PFormField lie = lie_derivative(v, w, kDual);

  // Oracle: (L_v w)_{ij} = v(w_ij) + w_kj d_i v^k + w_ik d_j v^k.
  std::vector<Point4> pts = halton_probes(40, Box4{}, 17);
  for (const Point4& pt : pts) {
    for (int slot = 0; slot < 6; ++slot) {
      const int* ij = tuple_of(2, slot);
      double want = 0.0;
      Vec4 vv = v.value(pt);
      for (int nu = 0; nu < 4; ++nu) {
        int idx[2] = {ij[0], ij[1]};
        want += vv[nu] * component_field(w, idx, 2).jet1(pt).d[nu];
      }
      for (int k = 0; k < 4; ++k) {
        int kj[2] = {k, ij[1]};
        int ik[2] = {ij[0], k};
        want += component_field(w, kj, 2)(pt)*v.comp[k].jet1(pt).d[ij[0]];
        want += component_field(w, ik, 2)(pt)*v.comp[k].jet1(pt).d[ij[1]];
      }
      CHECK(lie.comp[slot](pt) == doctest::Approx(want).epsilon(1e-9));
    }
  }
}

TEST_CASE("Lie derivative on degree-0 and degree-4 forms") {
  VectorField4 v = smooth_vector(1);
  std::vector<Point4> pts = halton_probes(40, Box4{}, 19);

  PFormField f0 = PFormField::zero(0);
  f0.comp[0] = wavy();
  PFormField l0 = lie_derivative(v, f0, kDual);
  ScalarField vf = directional(v, wavy(), kDual);
  for (const Point4& pt : pts)
    CHECK(l0.comp[0](pt) == doctest::Approx(vf(pt)).epsilon(1e-11));

  // L_v vol = div(v) vol.
  PFormField vol = PFormField::zero(4);
  vol.comp[0] = constant(1.0);
  PFormField l4 = lie_derivative(v, vol, kDual);
  for (const Point4& pt : pts) {
    double div = 0.0;
    for (int k = 0; k < 4; ++k) div += v.comp[k].jet1(pt).d[k];
    CHECK(l4.comp[0](pt) == doctest::Approx(div).epsilon(1e-10));
  }
}

TEST_CASE("tensor Lie derivative against the operator-commutator oracle") {
  // (L_X T)(Y) = [X, T(Y)] - T([X, Y]) for any vector argument Y.
  VectorField4 xv = smooth_vector(0);
  Tensor11Field t = tensor_zero();
  t.m[0][0] = x() * y();
  t.m[0][2] = sin_field(z());
  t.m[1][1] = constant(2.0);
  t.m[1][3] = xi();
  t.m[2][0] = cos_field(y());
  t.m[3][3] = x() + z();

  Tensor11Field lt = lie_derivative(xv, t, kDual);
  std::vector<Point4> pts = halton_probes(30, Box4{}, 23);
  for (int variant = 0; variant < 2; ++variant) {
    VectorField4 yv = smooth_vector(variant ^ 1);
    VectorField4 lhs = apply(lt, yv);
    VectorField4 rhs = lie_bracket(xv, apply(t, yv), kDual) -
                       apply(t, lie_bracket(xv, yv, kDual));
    CHECK(max_abs(lhs - rhs, pts) <= 1e-9);
  }
}

TEST_CASE("derivative providers are interchangeable on smooth fields") {
  DerivProvider fd = DerivProvider::finite_difference(1e-5);
  PFormField w = smooth_two_form();
  PFormField d_dual = exterior_derivative(w, kDual);
  PFormField d_fd = exterior_derivative(w, fd);
  std::vector<Point4> pts = halton_probes(60, Box4{}, 29);
  CHECK(max_abs(d_dual - d_fd, pts) <= 1e-8);

  VectorField4 a = smooth_vector(0);
  VectorField4 b = smooth_vector(1);
  CHECK(max_abs(lie_bracket(a, b, kDual) - lie_bracket(a, b, fd), pts) <= 1e-8);
}

TEST_CASE("directional derivative collapses constant vectors into one node") {
  VectorField4 xdir = constant_vector({-1.0, 0.0, 0.0, 1.0});
  ScalarField f = wavy();
  ScalarField fast = directional(xdir, f, kDual);
  for (const Point4& pt : halton_probes(30, Box4{}, 31)) {
    MultiDual<double> jet = f.jet1(pt);
    CHECK(fast(pt) == doctest::Approx(-jet.d[0] + jet.d[3]).epsilon(1e-13));
  }
}
