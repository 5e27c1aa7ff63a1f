#include "phlo/connections.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace phlo {

namespace {

VectorField4 column_of(const Tensor11Field& t, int col) {
  VectorField4 v;
  for (int r = 0; r < kDim; ++r) v.comp[r] = t.m[r][col];
  return v;
}

VectorField4 axis_derivative(const VectorField4& w, int axis, const DerivProvider& prov) {
  VectorField4 r;
  for (int i = 0; i < kDim; ++i) r.comp[i] = derivative(w.comp[i], axis, prov);
  return r;
}

double norm2(const Vec4& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

}  // namespace

Vec4 VectorValued2Form::value(const Point4& pt, const Vec4& x, const Vec4& y) const {
  Vec4 out{};
  for (int k = 0; k < 6; ++k) {
    int mu = kPairs[k][0], nu = kPairs[k][1];
    double coeff = x[mu] * y[nu] - x[nu] * y[mu];
    if (coeff == 0.0) continue;
    Vec4 v = pair_comp[k].value(pt);
    for (int i = 0; i < kDim; ++i) out[i] += coeff * v[i];
  }
  return out;
}

VectorValued2Form nijenhuis(const Tensor11Field& p, const DerivProvider& prov) {
  VectorValued2Form n;
  for (int k = 0; k < 6; ++k) {
    int mu = kPairs[k][0], nu = kPairs[k][1];
    VectorField4 pe_mu = column_of(p, mu);
    VectorField4 pe_nu = column_of(p, nu);
    // Coordinate fields commute, so the P[X,Y] term drops out:
    // N(e_mu, e_nu) = [P e_mu, P e_nu] - P(d_mu(P e_nu)) + P(d_nu(P e_mu)).
    VectorField4 val = lie_bracket(pe_mu, pe_nu, prov) -
                       apply(p, axis_derivative(pe_nu, mu, prov)) +
                       apply(p, axis_derivative(pe_mu, nu, prov));
    n.pair_comp[k] = val;
  }
  return n;
}

VectorValued2Form distribution_curvature(const Tensor11Field& project,
                                         const Tensor11Field& keep,
                                         const DerivProvider& prov) {
  VectorValued2Form r;
  for (int k = 0; k < 6; ++k) {
    int mu = kPairs[k][0], nu = kPairs[k][1];
    VectorField4 ke_mu = column_of(keep, mu);
    VectorField4 ke_nu = column_of(keep, nu);
    r.pair_comp[k] = apply(project, lie_bracket(ke_mu, ke_nu, prov));
  }
  return r;
}

ConnectionCurvature connection_curvature(const ScalarField& u, const ScalarField& p,
                                         double eps, const DerivProvider& prov) {
  ConnectionCurvature c;
  c.a = derivative(u, AXI, prov) - constant(eps) * derivative(u, AZ, prov);
  c.b = derivative(p, AXI, prov) - constant(eps) * derivative(p, AZ, prov);
  c.z1 = vector_zero();
  c.z1.comp[0] = constant(-eps) * c.a;
  c.z1.comp[1] = constant(-eps) * c.b;
  c.z2 = vector_zero();
  c.z2.comp[0] = c.b;
  c.z2.comp[1] = -c.a;
  c.ksq = c.a * c.a + c.b * c.b;
  return c;
}

ScalarField l0_squared_field(const ScalarField& phi_sq, const ScalarField& ksq) {
  return phi_sq / ksq;
}

L0Summary l0_summary(const ScalarField& phi_sq, const ScalarField& ksq,
                     const std::vector<Point4>& probes, double floor) {
  L0Summary s;
  double sum = 0.0;
  for (const Point4& pt : probes) {
    double k2 = ksq(pt);
    if (!(k2 > floor)) {
      ++s.undefined_count;
      continue;
    }
    double l0 = std::sqrt(phi_sq(pt) / k2);
    if (s.defined_count == 0) {
      s.min = s.max = l0;
    } else {
      s.min = std::min(s.min, l0);
      s.max = std::max(s.max, l0);
    }
    sum += l0;
    ++s.defined_count;
  }
  if (s.defined_count > 0) s.mean = sum / static_cast<double>(s.defined_count);
  if (s.undefined_count > 0)
    s.note = "length scale undefined where the curvature scale vanishes";
  return s;
}

std::pair<ScalarField, ScalarField> dual_mix(const ScalarField& u, const ScalarField& p,
                                             double eps, double a, double b) {
  ScalarField up = constant(a) * u + constant(eps * b) * p;
  ScalarField pp = constant(eps * b) * u - constant(a) * p;
  return {up, pp};
}

FrobeniusReport frobenius(const Distribution& d, const std::vector<Point4>& probes,
                          double tol, const DerivProvider& prov) {
  FrobeniusReport rep;
  rep.tol = tol;
  rep.probe_count = probes.size();
  const int k = static_cast<int>(d.generators.size());
  if (k < 2) {
    rep.integrable = true;
    return rep;
  }

  // Precompute bracket fields per generator pair.
  std::vector<FrobeniusPair> pairs;
  std::vector<VectorField4> brackets;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      FrobeniusPair pr;
      pr.gi = i;
      pr.gj = j;
      pairs.push_back(pr);
      brackets.push_back(lie_bracket(d.generators[i], d.generators[j], prov));
    }

  for (const Point4& pt : probes) {
    // Orthonormalize generator values (modified Gram-Schmidt).
    std::vector<Vec4> q;
    double scale = 0.0;
    std::vector<Vec4> gv(k);
    for (int i = 0; i < k; ++i) {
      gv[i] = d.generators[i].value(pt);
      scale = std::max(scale, norm2(gv[i]));
    }
    for (int i = 0; i < k; ++i) {
      Vec4 w = gv[i];
      for (const Vec4& e : q) {
        double proj = 0.0;
        for (int c = 0; c < kDim; ++c) proj += e[c] * w[c];
        for (int c = 0; c < kDim; ++c) w[c] -= proj * e[c];
      }
      double nw = norm2(w);
      if (nw <= 1e-12 * std::max(scale, 1.0)) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "distribution generators lose rank at probe (%g, %g, %g, %g)",
                      pt[0], pt[1], pt[2], pt[3]);
        throw std::runtime_error(buf);
      }
      for (int c = 0; c < kDim; ++c) w[c] /= nw;
      q.push_back(w);
    }

    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      Vec4 br = brackets[pi].value(pt);
      Vec4 tang{};
      for (const Vec4& e : q) {
        double proj = 0.0;
        for (int c = 0; c < kDim; ++c) proj += e[c] * br[c];
        for (int c = 0; c < kDim; ++c) tang[c] += proj * e[c];
      }
      Vec4 res;
      for (int c = 0; c < kDim; ++c) res[c] = br[c] - tang[c];
      double rn = norm2(res);
      if (rn >= pairs[pi].max_residual_norm) {
        pairs[pi].max_residual_norm = rn;
        pairs[pi].worst_probe = pt;
        pairs[pi].bracket = br;
        pairs[pi].tangential = tang;
        pairs[pi].residual = res;
      }
      rep.max_residual = std::max(rep.max_residual, rn);
    }
  }
  rep.pairs = std::move(pairs);
  rep.integrable = rep.max_residual <= tol;
  return rep;
}

CoframeCurvature coframe_curvature(const std::vector<PFormField>& alpha,
                                   const std::vector<VectorField4>& frame,
                                   const DerivProvider& prov) {
  if (alpha.size() != frame.size())
    throw std::invalid_argument("coframe_curvature: coframe/frame size mismatch");
  CoframeCurvature c;
  c.frame = frame;
  for (const PFormField& a : alpha) c.dalpha.push_back(exterior_derivative(a, prov));
  return c;
}

Vec4 CoframeCurvature::value(const Point4& pt, const Vec4& x, const Vec4& y) const {
  Vec4 out{};
  for (std::size_t m = 0; m < dalpha.size(); ++m) {
    Vec4 args[2] = {x, y};
    double coeff = -apply(dalpha[m].value(pt), args, 2);
    Vec4 ym = frame[m].value(pt);
    for (int i = 0; i < kDim; ++i) out[i] += coeff * ym[i];
  }
  return out;
}

double coframe_duality_residual(const std::vector<PFormField>& alpha,
                                const std::vector<VectorField4>& frame,
                                const std::vector<Point4>& probes) {
  double worst = 0.0;
  for (const Point4& pt : probes)
    for (std::size_t m = 0; m < alpha.size(); ++m)
      for (std::size_t n = 0; n < frame.size(); ++n) {
        double v = pairing(alpha[m].value(pt), frame[n].value(pt));
        double want = (m == n) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(v - want));
      }
  return worst;
}

}  // namespace phlo
