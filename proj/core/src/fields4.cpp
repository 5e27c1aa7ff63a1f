#include "phlo/fields4.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace phlo {

ScalarField component_field(const PFormField& w, const int* idx, int n) {
  assert(n == w.degree);
  int sign = perm_sign(idx, n);
  if (sign == 0) return constant(0.0);
  int sorted[4];
  std::copy(idx, idx + n, sorted);
  std::sort(sorted, sorted + n);
  ScalarField c = w.comp[slot_of(n, sorted)];
  return sign > 0 ? c : -c;
}

VectorField4 vector_zero() { return VectorField4{}; }

VectorField4 constant_vector(const Vec4& v) {
  VectorField4 out;
  for (int i = 0; i < kDim; ++i) out.comp[i] = constant(v[i]);
  return out;
}

Tensor11Field tensor_zero() { return Tensor11Field{}; }

Tensor11Field constant_tensor(const Mat4& mat) {
  Tensor11Field out;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) out.m[r][c] = constant(mat[r][c]);
  return out;
}

VectorField4 operator+(const VectorField4& a, const VectorField4& b) {
  VectorField4 out;
  for (int i = 0; i < kDim; ++i) out.comp[i] = a.comp[i] + b.comp[i];
  return out;
}

VectorField4 operator-(const VectorField4& a, const VectorField4& b) {
  VectorField4 out;
  for (int i = 0; i < kDim; ++i) out.comp[i] = a.comp[i] - b.comp[i];
  return out;
}

VectorField4 operator-(const VectorField4& a) {
  VectorField4 out;
  for (int i = 0; i < kDim; ++i) out.comp[i] = -a.comp[i];
  return out;
}

VectorField4 operator*(const ScalarField& s, const VectorField4& a) {
  VectorField4 out;
  for (int i = 0; i < kDim; ++i) out.comp[i] = s * a.comp[i];
  return out;
}

PFormField operator+(const PFormField& a, const PFormField& b) {
  assert(a.degree == b.degree);
  PFormField out = PFormField::zero(a.degree);
  for (int k = 0; k < a.count(); ++k) out.comp[k] = a.comp[k] + b.comp[k];
  return out;
}

PFormField operator-(const PFormField& a, const PFormField& b) {
  assert(a.degree == b.degree);
  PFormField out = PFormField::zero(a.degree);
  for (int k = 0; k < a.count(); ++k) out.comp[k] = a.comp[k] - b.comp[k];
  return out;
}

PFormField operator-(const PFormField& a) {
  PFormField out = PFormField::zero(a.degree);
  for (int k = 0; k < a.count(); ++k) out.comp[k] = -a.comp[k];
  return out;
}

PFormField operator*(const ScalarField& s, const PFormField& a) {
  PFormField out = PFormField::zero(a.degree);
  for (int k = 0; k < a.count(); ++k) out.comp[k] = s * a.comp[k];
  return out;
}

Tensor11Field operator+(const Tensor11Field& a, const Tensor11Field& b) {
  Tensor11Field out;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) out.m[r][c] = a.m[r][c] + b.m[r][c];
  return out;
}

Tensor11Field operator-(const Tensor11Field& a, const Tensor11Field& b) {
  Tensor11Field out;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) out.m[r][c] = a.m[r][c] - b.m[r][c];
  return out;
}

Tensor11Field operator*(const ScalarField& s, const Tensor11Field& a) {
  Tensor11Field out;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) out.m[r][c] = s * a.m[r][c];
  return out;
}

PFormField wedge(const PFormField& a, const PFormField& b) {
  int p = a.degree, q = b.degree;
  if (p + q > 4) throw std::invalid_argument("wedge: degree sum exceeds 4");
  PFormField r = PFormField::zero(p + q);
  for (int ia = 0; ia < kCompCount[p]; ++ia) {
    if (a.comp[ia].is_zero()) continue;
    for (int ib = 0; ib < kCompCount[q]; ++ib) {
      if (b.comp[ib].is_zero()) continue;
      int merged[4];
      for (int k = 0; k < p; ++k) merged[k] = tuple_of(p, ia)[k];
      for (int k = 0; k < q; ++k) merged[p + k] = tuple_of(q, ib)[k];
      int sign = perm_sign(merged, p + q);
      if (sign == 0) continue;
      int sorted[4];
      std::copy(merged, merged + p + q, sorted);
      std::sort(sorted, sorted + p + q);
      int slot = slot_of(p + q, sorted);
      ScalarField term = a.comp[ia] * b.comp[ib];
      r.comp[slot] = r.comp[slot] + (sign > 0 ? term : -term);
    }
  }
  return r;
}

PFormField hodge(const PFormField& a) {
  int p = a.degree;
  PFormField r = PFormField::zero(4 - p);
  for (int jr = 0; jr < kCompCount[4 - p]; ++jr) {
    const int* J = tuple_of(4 - p, jr);
    bool in_J[4] = {false, false, false, false};
    for (int k = 0; k < 4 - p; ++k) in_J[J[k]] = true;
    int concat[4];
    int n = 0;
    for (int i = 0; i < 4; ++i)
      if (!in_J[i]) concat[n++] = i;
    int jc[4];
    std::copy(concat, concat + p, jc);
    for (int k = 0; k < 4 - p; ++k) concat[p + k] = J[k];
    double eta_prod = 1.0;
    for (int k = 0; k < 4 - p; ++k) eta_prod *= kEta[J[k]];
    double factor = perm_sign(concat, 4) * eta_prod;
    r.comp[jr] = constant(factor) * a.comp[slot_of(p, jc)];
  }
  return r;
}

PFormField interior(const VectorField4& v, const PFormField& a) {
  int p = a.degree;
  if (p == 0) throw std::invalid_argument("interior: degree 0 form");
  PFormField r = PFormField::zero(p - 1);
  for (int kr = 0; kr < kCompCount[p - 1]; ++kr) {
    const int* K = tuple_of(p - 1, kr);
    ScalarField s = constant(0.0);
    for (int nu = 0; nu < 4; ++nu) {
      if (v.comp[nu].is_zero()) continue;
      int idx[4];
      idx[0] = nu;
      for (int k = 0; k < p - 1; ++k) idx[1 + k] = K[k];
      s = s + v.comp[nu] * component_field(a, idx, p);
    }
    r.comp[kr] = s;
  }
  return r;
}

VectorField4 raise(const PFormField& a) {
  assert(a.degree == 1);
  VectorField4 v;
  for (int i = 0; i < 4; ++i) v.comp[i] = constant(kEta[i]) * a.comp[i];
  return v;
}

PFormField lower(const VectorField4& v) {
  PFormField a = PFormField::zero(1);
  for (int i = 0; i < 4; ++i) a.comp[i] = constant(kEta[i]) * v.comp[i];
  return a;
}

ScalarField invariant_contraction(const PFormField& f, const PFormField& g) {
  assert(f.degree == 2 && g.degree == 2);
  ScalarField s = constant(0.0);
  for (int k = 0; k < 6; ++k) {
    int i = kPairs[k][0], j = kPairs[k][1];
    s = s + constant(2.0 * kEta[i] * kEta[j]) * f.comp[k] * g.comp[k];
  }
  return s;
}

PFormField flux_contraction(const PFormField& f, const PFormField& h) {
  assert(f.degree == 2 && h.degree == 3);
  PFormField r = PFormField::zero(1);
  for (int mu = 0; mu < 4; ++mu) {
    ScalarField s = constant(0.0);
    for (int k = 0; k < 6; ++k) {
      int a = kPairs[k][0], b = kPairs[k][1];
      if (f.comp[k].is_zero()) continue;
      int idx[3] = {a, b, mu};
      ScalarField h_comp = component_field(h, idx, 3);
      if (h_comp.is_zero()) continue;
      s = s + constant(2.0 * kEta[a] * kEta[b]) * f.comp[k] * h_comp;
    }
    r.comp[mu] = s;
  }
  return r;
}

PFormField pullback(const PFormField& a, const Tensor11Field& t) {
  int p = a.degree;
  if (p == 1) {
    // (t* a)_mu = a_nu t^nu_mu
    PFormField r = PFormField::zero(1);
    for (int mu = 0; mu < 4; ++mu) {
      ScalarField s = constant(0.0);
      for (int nu = 0; nu < 4; ++nu) s = s + a.comp[nu] * t.m[nu][mu];
      r.comp[mu] = s;
    }
    return r;
  }
  if (p == 2) {
    // (t* a)_{mu nu} = sum_{al<be} a_{al be} (t^al_mu t^be_nu - t^al_nu t^be_mu)
    PFormField r = PFormField::zero(2);
    for (int k = 0; k < 6; ++k) {
      int mu = kPairs[k][0], nu = kPairs[k][1];
      ScalarField s = constant(0.0);
      for (int c = 0; c < 6; ++c) {
        if (a.comp[c].is_zero()) continue;
        int al = kPairs[c][0], be = kPairs[c][1];
        s = s + a.comp[c] * (t.m[al][mu] * t.m[be][nu] - t.m[al][nu] * t.m[be][mu]);
      }
      r.comp[k] = s;
    }
    return r;
  }
  throw std::invalid_argument("pullback: only degrees 1 and 2 supported");
}

VectorField4 apply(const Tensor11Field& t, const VectorField4& v) {
  VectorField4 out;
  for (int r = 0; r < kDim; ++r) {
    ScalarField s = constant(0.0);
    for (int c = 0; c < kDim; ++c) s = s + t.m[r][c] * v.comp[c];
    out.comp[r] = s;
  }
  return out;
}

Tensor11Field compose(const Tensor11Field& a, const Tensor11Field& b) {
  Tensor11Field out;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) {
      ScalarField s = constant(0.0);
      for (int k = 0; k < kDim; ++k) s = s + a.m[r][k] * b.m[k][c];
      out.m[r][c] = s;
    }
  return out;
}

Tensor11Field transpose(const Tensor11Field& t) {
  Tensor11Field out;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) out.m[r][c] = t.m[c][r];
  return out;
}

ScalarField trace(const Tensor11Field& t) {
  ScalarField s = constant(0.0);
  for (int i = 0; i < kDim; ++i) s = s + t.m[i][i];
  return s;
}

}  // namespace phlo
