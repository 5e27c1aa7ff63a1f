#include "phlo/phlo_fields.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace phlo {

PhLOState build_state(const ScalarField& u, const ScalarField& p, const PhLOParams& prm,
                      const DerivProvider& prov, const std::vector<Point4>& check_probes) {
  PhLOState st;
  st.prm = prm;
  st.prov = prov;
  st.u = u;
  st.p = p;
  st.phi_sq = u * u + p * p;

  const double e = prm.eps;

  st.A = PFormField::zero(1);
  st.A.comp[AX] = u;
  st.A.comp[AY] = p;

  st.A_star = PFormField::zero(1);
  st.A_star.comp[AX] = constant(-e) * p;
  st.A_star.comp[AY] = constant(e) * u;

  st.zeta = PFormField::zero(1);
  st.zeta.comp[AZ] = constant(e);
  st.zeta.comp[AXI] = constant(1.0);

  st.X = vector_zero();
  st.X.comp[AZ] = constant(-e);
  st.X.comp[AXI] = constant(1.0);

  st.F = wedge(st.A, st.zeta);
  st.F_star = wedge(st.A_star, st.zeta);

  st.Abar = raise(st.A);
  st.Abar_star = raise(st.A_star);

  if (!check_probes.empty()) {
    PFormField hF = hodge(st.F);
    double worst = 0.0;
    for (const Point4& pt : check_probes) {
      PForm d = hF.value(pt) - st.F_star.value(pt);
      for (int k = 0; k < d.count(); ++k) worst = std::max(worst, std::abs(d.comp[k]));
    }
    if (worst > 1e-12) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "star of F does not match A* ^ zeta (max gap %.3e)", worst);
      throw std::runtime_error(buf);
    }
  }
  return st;
}

Tensor11Field stress_tensor(const PhLOState& st) {
  Tensor11Field t;
  for (int nu = 0; nu < kDim; ++nu)
    for (int mu = 0; mu < kDim; ++mu) {
      ScalarField s = constant(0.0);
      for (int sg = 0; sg < kDim; ++sg) {
        int i1[2] = {mu, sg};
        int i2[2] = {nu, sg};
        // F_{mu s} F^{nu s} = eta^{nu nu} eta^{ss} F_{mu s} F_{nu s}
        double scale = kEta[nu] * kEta[sg];
        ScalarField f1 = component_field(st.F, i1, 2), f2 = component_field(st.F, i2, 2);
        ScalarField g1 = component_field(st.F_star, i1, 2), g2 = component_field(st.F_star, i2, 2);
        s = s + constant(scale) * (f1 * f2 + g1 * g2);
      }
      t.m[nu][mu] = constant(-0.5) * s;
    }
  return t;
}

PFormField stress_divergence_direct(const Tensor11Field& t, const DerivProvider& prov) {
  PFormField r = PFormField::zero(1);
  for (int mu = 0; mu < kDim; ++mu) {
    ScalarField s = constant(0.0);
    for (int nu = 0; nu < kDim; ++nu) s = s + derivative(t.m[nu][mu], nu, prov);
    r.comp[mu] = s;
  }
  return r;
}

PFormField stress_divergence_flux(const PhLOState& st) {
  PFormField df = exterior_derivative(st.F, st.prov);
  PFormField dsf = exterior_derivative(st.F_star, st.prov);
  return constant(0.5) * (flux_contraction(st.F, df) + flux_contraction(st.F_star, dsf));
}

EedResiduals eed_residuals(const PhLOState& st) {
  PFormField df = exterior_derivative(st.F, st.prov);
  PFormField dsf = exterior_derivative(st.F_star, st.prov);
  EedResiduals r;
  r.r_ff = flux_contraction(st.F, df);
  r.r_ss = flux_contraction(st.F_star, dsf);
  r.r_mix = flux_contraction(st.F_star, df) + flux_contraction(st.F, dsf);
  return r;
}

EomResiduals eom_residuals(const PhLOState& st, const ProjectionSet& proj) {
  const double e = st.prm.eps;
  const double kl = st.prm.kappa * st.prm.l0;
  EomResiduals r;
  r.form = constant(kl) * lie_derivative(st.X, st.F, st.prov) - constant(e) * st.F_star;
  Tensor11Field dv = proj.v - proj.v0;
  Tensor11Field dvt = proj.vt - proj.v0;
  r.tensor = constant(kl) * lie_derivative(st.X, dv, st.prov) - constant(e) * dvt;
  ScalarField xu = directional(st.X, st.u, st.prov);
  ScalarField xp = directional(st.X, st.p, st.prov);
  r.scalar_u = constant(kl) * xu + st.p;
  r.scalar_p = constant(kl) * xp - st.u;
  return r;
}

ExchangeFluxes exchange_fluxes(const PhLOState& st, const ConnectionCurvature& cc) {
  ExchangeFluxes ex;
  ex.i_z1_f = interior(cc.z1, st.F);
  ex.i_z2_sf = interior(cc.z2, st.F_star);
  ex.i_z1_sf = interior(cc.z1, st.F_star);
  ex.i_z2_f = interior(cc.z2, st.F);
  const double e = st.prm.eps;
  ex.coeff_energy = constant(-e) * (st.u * cc.a + st.p * cc.b);
  ex.coeff_r = st.u * cc.b - st.p * cc.a;
  return ex;
}

AmplitudePhase amplitude_phase(const PhLOState& st) {
  AmplitudePhase ap;
  ap.phi = sqrt_field(st.phi_sq);
  ap.psi = atan2_field(st.p, st.u);
  ap.x_phi_sq = directional(st.X, st.phi_sq, st.prov);
  ap.x_psi = directional(st.X, ap.psi, st.prov);
  ap.big_r = st.u * directional(st.X, st.p, st.prov) - st.p * directional(st.X, st.u, st.prov);
  return ap;
}

FrameRotation frame_rotation(const PhLOState& st) {
  FrameRotation fr;
  fr.abar = st.Abar;
  fr.abar_star = st.Abar_star;
  fr.bracket_a = lie_bracket(st.Abar, st.X, st.prov);
  fr.bracket_as = lie_bracket(st.Abar_star, st.X, st.prov);

  AmplitudePhase ap = amplitude_phase(st);
  const double e = st.prm.eps;
  ScalarField half_log_rate = constant(-0.5) * (ap.x_phi_sq / st.phi_sq);
  ScalarField rot_rate = constant(e) * (ap.big_r / st.phi_sq);
  fr.alpha = half_log_rate;
  fr.delta = half_log_rate;
  fr.beta = rot_rate;
  fr.gamma = -rot_rate;
  return fr;
}

FrameRotation::Sample FrameRotation::solve(const Point4& pt) const {
  Sample s;
  Vec4 a = abar.value(pt), as = abar_star.value(pt);
  Vec4 b1 = bracket_a.value(pt), b2 = bracket_as.value(pt);
  // Columns (a, as) restricted to the x-y block; det = eps phi^2 up to sign.
  double det = a[0] * as[1] - as[0] * a[1];
  if (std::abs(det) < 1e-30) return s;
  // The matrix multiplies the frame row from the right, so the first bracket
  // expands as alpha abar + gamma abar*, the second as beta abar + delta abar*.
  s.alpha = (b1[0] * as[1] - as[0] * b1[1]) / det;
  s.gamma = (a[0] * b1[1] - b1[0] * a[1]) / det;
  s.beta = (b2[0] * as[1] - as[0] * b2[1]) / det;
  s.delta = (a[0] * b2[1] - b2[0] * a[1]) / det;
  s.ok = true;
  return s;
}

WedgeObstruction wedge_obstruction(const PhLOState& st) {
  WedgeObstruction w;
  PFormField da = exterior_derivative(st.A, st.prov);
  PFormField das = exterior_derivative(st.A_star, st.prov);
  w.coeff_a = wedge(wedge(da, st.A), st.zeta).comp[0];
  w.coeff_as = wedge(wedge(das, st.A_star), st.zeta).comp[0];
  AmplitudePhase ap = amplitude_phase(st);
  w.closed = constant(st.prm.eps) * ap.big_r;
  return w;
}

}  // namespace phlo
