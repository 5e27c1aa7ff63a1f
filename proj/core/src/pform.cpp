#include "phlo/pform.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace phlo {

namespace {

// Increasing tuple for (degree, slot), padded with -1.
constexpr std::array<std::array<int, 4>, 6> tuple_table(int degree) {
  std::array<std::array<int, 4>, 6> t{};
  for (auto& row : t) row = {-1, -1, -1, -1};
  switch (degree) {
    case 0:
      break;
    case 1:
      for (int i = 0; i < 4; ++i) t[i][0] = i;
      break;
    case 2:
      for (int k = 0; k < 6; ++k) {
        t[k][0] = kPairs[k][0];
        t[k][1] = kPairs[k][1];
      }
      break;
    case 3:
      for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 3; ++j) t[k][j] = kTriples[k][j];
      break;
    default:
      t[0] = {0, 1, 2, 3};
      break;
  }
  return t;
}

const std::array<std::array<int, 4>, 6> kTuples[5] = {
    tuple_table(0), tuple_table(1), tuple_table(2), tuple_table(3), tuple_table(4)};

int tuple_index(int degree, const int* idx) {
  switch (degree) {
    case 0: return 0;
    case 1: return idx[0];
    case 2: return pair_index(idx[0], idx[1]);
    case 3: return triple_index(idx[0], idx[1], idx[2]);
    default: return 0;
  }
}

const char* kAxisName[4] = {"dx", "dy", "dz", "dxi"};

}  // namespace

const int* tuple_of(int degree, int slot) { return kTuples[degree][slot].data(); }

int slot_of(int degree, const int* sorted_idx) { return tuple_index(degree, sorted_idx); }

int pair_index(int i, int j) {
  static constexpr int lut[4][4] = {
      {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  assert(i < j);
  return lut[i][j];
}

int triple_index(int i, int j, int k) {
  // Complement determines the slot: triples are indexed by the missing axis.
  int missing = 0 + 1 + 2 + 3 - i - j - k;
  static constexpr int by_missing[4] = {3, 2, 1, 0};
  assert(i < j && j < k);
  return by_missing[missing];
}

int perm_sign(const int* idx, int n) {
  int sign = 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (idx[a] == idx[b]) return 0;
      if (idx[a] > idx[b]) sign = -sign;
    }
  return sign;
}

PForm operator+(const PForm& a, const PForm& b) {
  assert(a.degree == b.degree);
  PForm r = a;
  for (int k = 0; k < r.count(); ++k) r.comp[k] += b.comp[k];
  return r;
}

PForm operator-(const PForm& a, const PForm& b) {
  assert(a.degree == b.degree);
  PForm r = a;
  for (int k = 0; k < r.count(); ++k) r.comp[k] -= b.comp[k];
  return r;
}

PForm operator*(double s, const PForm& a) {
  PForm r = a;
  for (int k = 0; k < r.count(); ++k) r.comp[k] *= s;
  return r;
}

PForm operator*(const PForm& a, double s) { return s * a; }

double component(const PForm& a, const int* idx, int n) {
  assert(n == a.degree);
  int sign = perm_sign(idx, n);
  if (sign == 0) return 0.0;
  int sorted[4];
  std::copy(idx, idx + n, sorted);
  std::sort(sorted, sorted + n);
  return sign * a.comp[tuple_index(a.degree, sorted)];
}

PForm wedge(const PForm& a, const PForm& b) {
  int p = a.degree, q = b.degree;
  if (p + q > 4) throw std::invalid_argument("wedge: degree sum exceeds 4");
  PForm r = PForm::zero(p + q);
  for (int ia = 0; ia < kCompCount[p]; ++ia) {
    if (a.comp[ia] == 0.0) continue;
    for (int ib = 0; ib < kCompCount[q]; ++ib) {
      if (b.comp[ib] == 0.0) continue;
      int merged[4];
      for (int k = 0; k < p; ++k) merged[k] = kTuples[p][ia][k];
      for (int k = 0; k < q; ++k) merged[p + k] = kTuples[q][ib][k];
      int sign = perm_sign(merged, p + q);
      if (sign == 0) continue;
      int sorted[4];
      std::copy(merged, merged + p + q, sorted);
      std::sort(sorted, sorted + p + q);
      r.comp[tuple_index(p + q, sorted)] += sign * a.comp[ia] * b.comp[ib];
    }
  }
  return r;
}

PForm hodge(const PForm& a) {
  int p = a.degree;
  PForm r = PForm::zero(4 - p);
  for (int jr = 0; jr < kCompCount[4 - p]; ++jr) {
    const auto& J = kTuples[4 - p][jr];
    bool in_J[4] = {false, false, false, false};
    for (int k = 0; k < 4 - p; ++k) in_J[J[k]] = true;
    int concat[4];
    int n = 0;
    for (int i = 0; i < 4; ++i)
      if (!in_J[i]) concat[n++] = i;  // J^c, ascending
    int jc[4];
    std::copy(concat, concat + p, jc);
    for (int k = 0; k < 4 - p; ++k) concat[p + k] = J[k];
    double eta_prod = 1.0;
    for (int k = 0; k < 4 - p; ++k) eta_prod *= kEta[J[k]];
    r.comp[jr] = perm_sign(concat, 4) * eta_prod * a.comp[tuple_index(p, jc)];
  }
  return r;
}

PForm interior(const Vec4& v, const PForm& a) {
  int p = a.degree;
  if (p == 0) throw std::invalid_argument("interior: degree 0 form");
  PForm r = PForm::zero(p - 1);
  for (int kr = 0; kr < kCompCount[p - 1]; ++kr) {
    const auto& K = kTuples[p - 1][kr];
    double s = 0.0;
    for (int nu = 0; nu < 4; ++nu) {
      if (v[nu] == 0.0) continue;
      int idx[4];
      idx[0] = nu;
      for (int k = 0; k < p - 1; ++k) idx[1 + k] = K[k];
      s += v[nu] * component(a, idx, p);
    }
    r.comp[kr] = s;
  }
  return r;
}

Vec4 raise(const PForm& one_form) {
  assert(one_form.degree == 1);
  Vec4 v{};
  for (int i = 0; i < 4; ++i) v[i] = kEta[i] * one_form.comp[i];
  return v;
}

PForm lower(const Vec4& v) {
  PForm a = PForm::zero(1);
  for (int i = 0; i < 4; ++i) a.comp[i] = kEta[i] * v[i];
  return a;
}

double invariant_contraction(const PForm& f2, const PForm& g2) {
  assert(f2.degree == 2 && g2.degree == 2);
  double s = 0.0;
  for (int k = 0; k < 6; ++k) {
    int i = kPairs[k][0], j = kPairs[k][1];
    s += 2.0 * f2.comp[k] * g2.comp[k] * kEta[i] * kEta[j];
  }
  return s;
}

PForm flux_contraction(const PForm& f2, const PForm& h3) {
  assert(f2.degree == 2 && h3.degree == 3);
  PForm r = PForm::zero(1);
  for (int mu = 0; mu < 4; ++mu) {
    double s = 0.0;
    for (int k = 0; k < 6; ++k) {
      int a = kPairs[k][0], b = kPairs[k][1];
      double f_up = kEta[a] * kEta[b] * f2.comp[k];
      if (f_up == 0.0) continue;
      int idx[3] = {a, b, mu};
      s += 2.0 * f_up * component(h3, idx, 3);
    }
    r.comp[mu] = s;
  }
  return r;
}

double apply(const PForm& a, const Vec4* vs, int n) {
  assert(n == a.degree);
  if (n == 0) return a.comp[0];
  double total = 0.0;
  for (int c = 0; c < kCompCount[n]; ++c) {
    if (a.comp[c] == 0.0) continue;
    const auto& I = kTuples[n][c];
    // det of the n x n minor [vs_j^{I_k}]
    double det = 0.0;
    int perm[4] = {0, 1, 2, 3};
    do {
      double prod = 1.0;
      for (int k = 0; k < n; ++k) prod *= vs[perm[k]][I[k]];
      det += perm_sign(perm, n) * prod;
    } while (std::next_permutation(perm, perm + n));
    total += a.comp[c] * det;
  }
  return total;
}

PForm pullback(const PForm& a, const Mat4& m) {
  int p = a.degree;
  if (p == 0) return a;
  PForm r = PForm::zero(p);
  Vec4 cols[4];
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) cols[j][i] = m[i][j];
  for (int c = 0; c < kCompCount[p]; ++c) {
    const auto& I = kTuples[p][c];
    Vec4 args[4];
    for (int k = 0; k < p; ++k) args[k] = cols[I[k]];
    r.comp[c] = apply(a, args, p);
  }
  return r;
}

std::string comp_name(int degree, int k) {
  if (degree == 0) return "1";
  std::string s;
  for (int j = 0; j < degree; ++j) {
    if (j) s += "^";
    s += kAxisName[kTuples[degree][k][j]];
  }
  return s;
}

}  // namespace phlo
