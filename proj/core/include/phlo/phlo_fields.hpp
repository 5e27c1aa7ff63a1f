#pragma once

#include <vector>

#include "phlo/connections.hpp"

// Assembly of the photon-like field objects from a state (u, p): the paired
// potentials, the null transport direction, the field strength and its star,
// the stress tensor, the equation-of-motion residual forms, and the derived
// exchange and rotation quantities.

namespace phlo {

struct PhLOParams {
  double eps{-1.0};    // chirality sign, +1 or -1
  double kappa{1.0};   // rotation sense, +1 or -1
  double l0{0.25};     // length scale
  double c{1.0};       // signal speed (scales time reporting only)

  double lambda() const { return 4.0 * l0; }
  double period() const { return lambda() / c; }
  double frequency() const { return c / lambda(); }
};

struct PhLOState {
  PhLOParams prm;
  DerivProvider prov;
  ScalarField u, p;
  ScalarField phi_sq;            // u^2 + p^2
  PFormField A, A_star, zeta;    // 1-forms; zeta has constant coefficients
  VectorField4 X;                // null direction -eps d_z + d_xi
  PFormField F, F_star;          // F = A ^ zeta and its Hodge dual
  VectorField4 Abar, Abar_star;  // metric raises of A, A_star
};

// Assembles the state. If check_probes is nonempty, verifies *F == A* ^ zeta
// there (tolerance 1e-12) and throws on mismatch.
PhLOState build_state(const ScalarField& u, const ScalarField& p, const PhLOParams& prm,
                      const DerivProvider& prov,
                      const std::vector<Point4>& check_probes = {});

// T_mu^nu = -1/2 [ F_{mu s} F^{nu s} + (*F)_{mu s} (*F)^{nu s} ]; rows carry nu.
Tensor11Field stress_tensor(const PhLOState& st);

// (div T)_mu = d_nu T_mu^nu.
PFormField stress_divergence_direct(const Tensor11Field& t, const DerivProvider& prov);

// Flux form of the same divergence: 1/2 [ F^{ns}(dF)_{ns mu} + (*F)^{ns}(d*F)_{ns mu} ].
PFormField stress_divergence_flux(const PhLOState& st);

// Residuals of the charge-free field equations, one per contraction family.
struct EedResiduals {
  PFormField r_ff;    // F^{ns} (dF)_{ns mu}
  PFormField r_ss;    // (*F)^{ns} (d*F)_{ns mu}
  PFormField r_mix;   // (*F)^{ns} (dF)_{ns mu} + F^{ns} (d*F)_{ns mu}
};
EedResiduals eed_residuals(const PhLOState& st);

// Equation-of-motion residuals in three equivalent presentations.
struct EomResiduals {
  PFormField form;       // kappa l0 L_X F - eps *F
  Tensor11Field tensor;  // kappa l0 L_X (V - V0) - eps (V~ - V0)
  ScalarField scalar_u;  // kappa l0 X(u) + p
  ScalarField scalar_p;  // kappa l0 X(p) - u
};
EomResiduals eom_residuals(const PhLOState& st, const ProjectionSet& proj);

// Contractions of the curvature vectors into F and *F. Each is proportional
// to zeta; closed-form coefficients are supplied for cross-checking.
struct ExchangeFluxes {
  PFormField i_z1_f, i_z2_sf;   // both equal -eps (u a + p b) zeta
  PFormField i_z1_sf, i_z2_f;   // -R zeta and +R zeta
  ScalarField coeff_energy;     // -eps (u a + p b)
  ScalarField coeff_r;          // R = u b - p a
};
ExchangeFluxes exchange_fluxes(const PhLOState& st, const ConnectionCurvature& cc);

struct AmplitudePhase {
  ScalarField phi;        // sqrt(u^2 + p^2)
  ScalarField psi;        // atan2(p, u), valid where phi > 0
  ScalarField x_phi_sq;   // X(phi^2)
  ScalarField x_psi;      // X(psi), valid where phi > 0
  ScalarField big_r;      // u X(p) - p X(u) = phi^2 X(psi)
};
AmplitudePhase amplitude_phase(const PhLOState& st);

// Rotation of the moving pair (Abar, Abar*) along X:
// [Abar, X] = alpha Abar + gamma Abar*, [Abar*, X] = beta Abar + delta Abar*.
struct FrameRotation {
  ScalarField alpha, beta, gamma, delta;  // closed forms, valid where phi > 0
  VectorField4 bracket_a, bracket_as;     // the two brackets
  VectorField4 abar, abar_star;

  struct Sample {
    double alpha{0}, beta{0}, gamma{0}, delta{0};
    bool ok{false};  // false where the frame degenerates (phi ~ 0)
  };
  Sample solve(const Point4& pt) const;  // pointwise 2x2 solve from the brackets
};
FrameRotation frame_rotation(const PhLOState& st);

// Wedge obstructions to integrability of the two potential distributions:
// dA ^ A ^ zeta and dA* ^ A* ^ zeta, both equal to eps R vol.
struct WedgeObstruction {
  ScalarField coeff_a;    // coefficient of the volume form for A
  ScalarField coeff_as;   // same for A*
  ScalarField closed;     // eps (u X(p) - p X(u))
};
WedgeObstruction wedge_obstruction(const PhLOState& st);

}  // namespace phlo
