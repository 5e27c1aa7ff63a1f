#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "phlo/phlo_fields.hpp"
#include "phlo/probes.hpp"

using namespace phlo;

namespace {

const DerivProvider kDual = DerivProvider::dual();

ScalarField x() { return coordinate(AX); }
ScalarField y() { return coordinate(AY); }
ScalarField z() { return coordinate(AZ); }
ScalarField xi() { return coordinate(AXI); }

// Generic smooth state, not a solution of anything.
struct GenericState {
  ScalarField u = sin_field(z() + xi()) * (constant(1.0) + constant(0.1) * x());
  ScalarField p = cos_field(z() - constant(0.5) * xi()) + constant(0.2) * y() * y();
};

PhLOParams params(double eps, double kappa) {
  PhLOParams prm;
  prm.eps = eps;
  prm.kappa = kappa;
  prm.l0 = 0.25;
  prm.c = 1.0;
  return prm;
}

double max_abs(const PFormField& w, const std::vector<Point4>& pts) {
  double m = 0.0;
  for (const Point4& pt : pts)
    for (int k = 0; k < w.count(); ++k) m = std::max(m, std::abs(w.comp[k](pt)));
  return m;
}

double max_abs(const ScalarField& f, const std::vector<Point4>& pts) {
  double m = 0.0;
  for (const Point4& pt : pts) m = std::max(m, std::abs(f(pt)));
  return m;
}

double max_abs(const Tensor11Field& t, const std::vector<Point4>& pts) {
  double m = 0.0;
  for (const Point4& pt : pts)
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m = std::max(m, std::abs(t.m[r][c](pt)));
  return m;
}

// Constant-amplitude transverse rotation along s = xi - eps z; satisfies the
// transport equations exactly for the matching angular rate.
PhLOState plane_state(double eps, double kappa) {
  PhLOParams prm = params(eps, kappa);
  double w = kappa / (2.0 * prm.l0);
  ScalarField s = xi() - constant(eps) * z();
  return build_state(cos_field(constant(w) * s), sin_field(constant(w) * s), prm, kDual);
}

}  // namespace

TEST_CASE("state assembly pins the dual pairing") {
  GenericState g;
  for (double eps : {-1.0, 1.0}) {
    std::vector<Point4> pts = halton_probes(40, Box4{}, 3);
    PhLOState st = build_state(g.u, g.p, params(eps, 1.0), kDual, pts);

    for (const Point4& pt : pts) {
      double u = g.u(pt), p = g.p(pt);
      CHECK(st.A.comp[AX](pt) == doctest::Approx(u));
      CHECK(st.A.comp[AY](pt) == doctest::Approx(p));
      CHECK(st.A_star.comp[AX](pt) == doctest::Approx(-eps * p));
      CHECK(st.A_star.comp[AY](pt) == doctest::Approx(eps * u));
      CHECK(st.zeta.comp[AZ](pt) == eps);
      CHECK(st.zeta.comp[AXI](pt) == 1.0);
      CHECK(st.phi_sq(pt) == doctest::Approx(u * u + p * p));

      // Raising with signature (-,-,-,+) flips spatial components.
      Vec4 ab = st.Abar.value(pt);
      CHECK(ab[0] == doctest::Approx(-u));
      CHECK(ab[1] == doctest::Approx(-p));
      Vec4 xv = st.X.value(pt);
      CHECK(xv[2] == -eps);
      CHECK(xv[3] == 1.0);
    }

    // F and *F agree with the wedge assembly.
    CHECK(max_abs(st.F - wedge(st.A, st.zeta), pts) == 0.0);
    CHECK(max_abs(st.F_star - wedge(st.A_star, st.zeta), pts) <= 1e-12);
    CHECK(max_abs(st.F_star - hodge(st.F), pts) <= 1e-12);
  }
}

TEST_CASE("both field invariants vanish for every state") {
  GenericState g;
  PhLOState st = build_state(g.u, g.p, params(-1.0, 1.0), kDual);
  std::vector<Point4> pts = halton_probes(60, Box4{}, 5);
  CHECK(max_abs(wedge(st.F, st.F), pts) <= 1e-13);
  CHECK(max_abs(wedge(st.F, st.F_star), pts) <= 1e-13);
  for (const Point4& pt : pts) {
    CHECK(std::abs(invariant_contraction(st.F.value(pt), st.F.value(pt))) <= 1e-13);
    CHECK(std::abs(invariant_contraction(st.F.value(pt), st.F_star.value(pt))) <= 1e-13);
  }
}

TEST_CASE("stress tensor is the null block scaled by the amplitude") {
  GenericState g;
  for (double eps : {-1.0, 1.0}) {
    PhLOState st = build_state(g.u, g.p, params(eps, 1.0), kDual);
    Tensor11Field t = stress_tensor(st);
    std::vector<Point4> pts = halton_probes(40, Box4{}, 7);
    for (const Point4& pt : pts) {
      double f2 = st.phi_sq(pt);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
          double want = 0.0;
          if (r == AZ && c == AZ) want = -f2;
          if (r == AXI && c == AXI) want = f2;
          if (r == AXI && c == AZ) want = eps * f2;
          if (r == AZ && c == AXI) want = -eps * f2;
          CHECK(t.m[r][c](pt) == doctest::Approx(want).epsilon(1e-12));
        }
    }
    // Traceless, nilpotent, and annihilates the transport direction.
    CHECK(max_abs(trace(t), pts) <= 1e-12);
    CHECK(max_abs(compose(t, t), pts) <= 1e-12);
    VectorField4 tx = apply(t, st.X);
    for (const Point4& pt : pts)
      for (int i = 0; i < 4; ++i) CHECK(std::abs(tx.comp[i](pt)) <= 1e-12);
  }
}

TEST_CASE("direct and flux forms of the stress divergence agree") {
  GenericState g;
  PhLOState st = build_state(g.u, g.p, params(-1.0, 1.0), kDual);
  Tensor11Field t = stress_tensor(st);
  PFormField direct = stress_divergence_direct(t, kDual);
  PFormField flux = stress_divergence_flux(st);
  std::vector<Point4> pts = halton_probes(80, Box4{}, 9);
  CHECK(max_abs(direct - flux, pts) <= 1e-9);

  // The flux form is half the sum of the two pure contraction families.
  EedResiduals eer = eed_residuals(st);
  CHECK(max_abs(flux - constant(0.5) * (eer.r_ff + eer.r_ss), pts) <= 1e-10);
}

TEST_CASE("running waves satisfy the charge-free equations but not transport") {
  for (double eps : {-1.0, 1.0}) {
    ScalarField s = xi() + constant(eps) * z();
    ScalarField u = sin_field(s);
    ScalarField p = cos_field(constant(2.0) * s);
    PhLOState st = build_state(u, p, params(eps, 1.0), kDual);
    std::vector<Point4> pts = halton_probes(60, Box4{}, 11);

    // dF = du ^ dx ^ zeta with du proportional to zeta, so everything closes.
    EedResiduals eer = eed_residuals(st);
    CHECK(max_abs(eer.r_ff, pts) <= 1e-12);
    CHECK(max_abs(eer.r_ss, pts) <= 1e-12);
    CHECK(max_abs(eer.r_mix, pts) <= 1e-12);
    CHECK(max_abs(stress_divergence_flux(st), pts) <= 1e-12);

    // The transport pair does not vanish: X kills the profile, leaving (p, -u).
    ProjectionSet proj = build_projections(u, p, eps);
    EomResiduals eom = eom_residuals(st, proj);
    for (const Point4& pt : pts) {
      CHECK(eom.scalar_u(pt) == doctest::Approx(p(pt)).epsilon(1e-12));
      CHECK(eom.scalar_p(pt) == doctest::Approx(-u(pt)).epsilon(1e-12));
    }
  }
}

TEST_CASE("the three transport presentations are one equation") {
  // On an arbitrary state the form and tensor residuals are linear images of
  // the scalar pair; checking the images pins every sign in the assembly.
  GenericState g;
  for (double eps : {-1.0, 1.0})
    for (double kappa : {-1.0, 1.0}) {
      PhLOState st = build_state(g.u, g.p, params(eps, kappa), kDual);
      ProjectionSet proj = build_projections(g.u, g.p, eps);
      EomResiduals eom = eom_residuals(st, proj);
      std::vector<Point4> pts = halton_probes(30, Box4{}, 13);

      const int xz[2] = {AX, AZ}, xxi[2] = {AX, AXI}, yz[2] = {AY, AZ}, yxi[2] = {AY, AXI};
      for (const Point4& pt : pts) {
        double ru = eom.scalar_u(pt), rp = eom.scalar_p(pt);
        CHECK(eom.form.comp[slot_of(2, xz)](pt) == doctest::Approx(eps * ru).epsilon(1e-10));
        CHECK(eom.form.comp[slot_of(2, xxi)](pt) == doctest::Approx(ru).epsilon(1e-10));
        CHECK(eom.form.comp[slot_of(2, yz)](pt) == doctest::Approx(eps * rp).epsilon(1e-10));
        CHECK(eom.form.comp[slot_of(2, yxi)](pt) == doctest::Approx(rp).epsilon(1e-10));
        const int dead[2][2] = {{AX, AY}, {AZ, AXI}};
        for (auto& ij : dead) CHECK(std::abs(eom.form.comp[slot_of(2, ij)](pt)) <= 1e-11);

        CHECK(eom.tensor.m[0][2](pt) == doctest::Approx(-eps * ru).epsilon(1e-10));
        CHECK(eom.tensor.m[0][3](pt) == doctest::Approx(-ru).epsilon(1e-10));
        CHECK(eom.tensor.m[1][2](pt) == doctest::Approx(-eps * rp).epsilon(1e-10));
        CHECK(eom.tensor.m[1][3](pt) == doctest::Approx(-rp).epsilon(1e-10));
      }
    }
}

TEST_CASE("constant-amplitude rotation solves the transport equations") {
  for (double eps : {-1.0, 1.0})
    for (double kappa : {-1.0, 1.0}) {
      PhLOState st = plane_state(eps, kappa);
      ProjectionSet proj = build_projections(st.u, st.p, eps);
      EomResiduals eom = eom_residuals(st, proj);
      std::vector<Point4> pts = halton_probes(40, Box4{}, 17);
      CHECK(max_abs(eom.scalar_u, pts) <= 1e-11);
      CHECK(max_abs(eom.scalar_p, pts) <= 1e-11);
      CHECK(max_abs(eom.form, pts) <= 1e-11);
      CHECK(max_abs(eom.tensor, pts) <= 1e-11);

      // Phase transport rate carries the rotation sense.
      AmplitudePhase ap = amplitude_phase(st);
      for (const Point4& pt : pts) {
        CHECK(ap.x_psi(pt) == doctest::Approx(kappa / st.prm.l0).epsilon(1e-10));
        CHECK(ap.x_phi_sq(pt) == doctest::Approx(0.0));
      }
    }
}

TEST_CASE("amplitude and phase derived quantities are consistent") {
  GenericState g;
  PhLOState st = build_state(g.u, g.p, params(-1.0, 1.0), kDual);
  AmplitudePhase ap = amplitude_phase(st);
  ConnectionCurvature cc = connection_curvature(g.u, g.p, -1.0, kDual);
  for (const Point4& pt : halton_probes(50, Box4{}, 19)) {
    double u = g.u(pt), p = g.p(pt);
    if (u * u + p * p < 1e-6) continue;
    CHECK(ap.phi(pt) == doctest::Approx(std::sqrt(u * u + p * p)).epsilon(1e-12));
    CHECK(ap.psi(pt) == doctest::Approx(std::atan2(p, u)).epsilon(1e-12));
    CHECK(ap.big_r(pt) ==
          doctest::Approx(u * cc.b(pt) - p * cc.a(pt)).epsilon(1e-11));
    CHECK(ap.big_r(pt) == doctest::Approx(st.phi_sq(pt) * ap.x_psi(pt)).epsilon(1e-10));
  }
}

TEST_CASE("curvature contractions land on the transport coframe") {
  GenericState g;
  for (double eps : {-1.0, 1.0}) {
    PhLOState st = build_state(g.u, g.p, params(eps, 1.0), kDual);
    ConnectionCurvature cc = connection_curvature(g.u, g.p, eps, kDual);
    ExchangeFluxes ex = exchange_fluxes(st, cc);
    std::vector<Point4> pts = halton_probes(50, Box4{}, 23);

    // Both energy-type contractions agree, both rotation-type are opposite.
    CHECK(max_abs(ex.i_z1_f - ex.i_z2_sf, pts) <= 1e-11);
    CHECK(max_abs(ex.i_z1_sf + ex.i_z2_f, pts) <= 1e-11);

    for (const Point4& pt : pts) {
      double u = g.u(pt), p = g.p(pt), a = cc.a(pt), b = cc.b(pt);
      CHECK(ex.coeff_energy(pt) == doctest::Approx(-eps * (u * a + p * b)).epsilon(1e-11));
      CHECK(ex.coeff_r(pt) == doctest::Approx(u * b - p * a).epsilon(1e-11));
      for (int k = 0; k < 4; ++k) {
        double zk = st.zeta.comp[k](pt);
        CHECK(ex.i_z1_f.comp[k](pt) ==
              doctest::Approx(ex.coeff_energy(pt) * zk).epsilon(1e-11));
        CHECK(ex.i_z1_sf.comp[k](pt) ==
              doctest::Approx(-ex.coeff_r(pt) * zk).epsilon(1e-11));
        CHECK(ex.i_z2_f.comp[k](pt) ==
              doctest::Approx(ex.coeff_r(pt) * zk).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("frame rotation brackets expand on the moving pair") {
  // Amplitude varying along z makes alpha and delta nonzero.
  ScalarField amp = constant(2.0) + constant(0.3) * sin_field(z());
  ScalarField s = constant(2.0) * (xi() - z());
  ScalarField u = amp * cos_field(s);
  ScalarField p = amp * sin_field(s);
  for (double eps : {-1.0, 1.0}) {
    PhLOState st = build_state(u, p, params(eps, 1.0), kDual);
    FrameRotation fr = frame_rotation(st);
    std::vector<Point4> pts = halton_probes(40, Box4{}, 29);

    for (const Point4& pt : pts) {
      // Pointwise solve reproduces the closed coefficients.
      FrameRotation::Sample sm = fr.solve(pt);
      REQUIRE(sm.ok);
      CHECK(sm.alpha == doctest::Approx(fr.alpha(pt)).epsilon(1e-9));
      CHECK(sm.beta == doctest::Approx(fr.beta(pt)).epsilon(1e-9));
      CHECK(sm.gamma == doctest::Approx(fr.gamma(pt)).epsilon(1e-9));
      CHECK(sm.delta == doctest::Approx(fr.delta(pt)).epsilon(1e-9));
      CHECK(fr.alpha(pt) == doctest::Approx(fr.delta(pt)).epsilon(1e-10));
      CHECK(fr.beta(pt) == doctest::Approx(-fr.gamma(pt)).epsilon(1e-10));

      // Bracket of the pair with X expands with alpha on the first slot and
      // gamma on the second.
      Vec4 b1 = fr.bracket_a.value(pt);
      Vec4 ab = fr.abar.value(pt), asb = fr.abar_star.value(pt);
      for (int i = 0; i < 2; ++i)
        CHECK(b1[i] == doctest::Approx(fr.alpha(pt) * ab[i] + fr.gamma(pt) * asb[i])
                           .epsilon(1e-9));
      Vec4 b2 = fr.bracket_as.value(pt);
      for (int i = 0; i < 2; ++i)
        CHECK(b2[i] == doctest::Approx(fr.beta(pt) * ab[i] + fr.delta(pt) * asb[i])
                           .epsilon(1e-9));
    }
  }
}

TEST_CASE("frame solve reports degeneracy at zero amplitude") {
  PhLOState st = build_state(constant(0.0), constant(0.0), params(-1.0, 1.0), kDual);
  FrameRotation fr = frame_rotation(st);
  FrameRotation::Sample sm = fr.solve(Point4{0.1, 0.2, 0.3, 0.4});
  CHECK(!sm.ok);
}

TEST_CASE("wedge obstructions reproduce the rotation flux") {
  GenericState g;
  for (double eps : {-1.0, 1.0}) {
    PhLOState st = build_state(g.u, g.p, params(eps, 1.0), kDual);
    WedgeObstruction w = wedge_obstruction(st);
    AmplitudePhase ap = amplitude_phase(st);
    std::vector<Point4> pts = halton_probes(50, Box4{}, 31);
    for (const Point4& pt : pts) {
      double want = eps * ap.big_r(pt);
      CHECK(w.coeff_a(pt) == doctest::Approx(want).epsilon(1e-10));
      CHECK(w.coeff_as(pt) == doctest::Approx(want).epsilon(1e-10));
      CHECK(w.closed(pt) == doctest::Approx(want).epsilon(1e-12));
    }
  }
}
