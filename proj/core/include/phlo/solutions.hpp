#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "phlo/phlo_fields.hpp"
#include "phlo/quadrature.hpp"

// The closed solution family (compact bump amplitude times a rotating phase),
// grid sampling, energy and action quadratures, and the helical kinematics of
// constant-amplitude points.

namespace phlo {

struct GridSpec {
  int nx{16}, ny{16}, nz{16};
};

struct SolutionConfig {
  PhLOParams prm;                   // eps, kappa, l0, c
  double center_a{1.0};             // transverse disk center
  double center_b{1.0};
  double r0{0.5};                   // transverse support radius
  double gamma{1.0};                // amplitude scale
  double phi0{0.0};                 // phase offset
  enum class Family { Psi1, Psi2 } family{Family::Psi1};
  std::string u_expr, p_expr;       // both nonempty: custom state from the DSL
  DerivProvider prov{};
  std::uint64_t seed{42};
  GridSpec grid{};                  // sampling grid for CSV output
  std::optional<Box4> box;          // overrides the derived integration box
};

struct Solution {
  SolutionConfig cfg;
  ScalarField u, p;
  bool analytic{true};  // false when built from custom expressions

  PhLOState state(const std::vector<Point4>& check_probes = {}) const {
    return build_state(u, p, cfg.prm, cfg.prov, check_probes);
  }
};

// Builds the closed family unless both expression overrides are present.
// Throws dsl::ParseError / std::runtime_error on bad expressions.
Solution build_solution(const SolutionConfig& cfg);

// Spatial box covering the support at fixed xi (or cfg.box if set).
Box4 support_box(const SolutionConfig& cfg, double xi);
// 4d box covering the support for xi in [0, lambda] (or cfg.box if set).
Box4 support_box4(const SolutionConfig& cfg);
// Probe box for invariant checks: support at xi = lambda/2, shrunk toward the
// bulk so probes avoid the zero-amplitude exterior.
Box4 probe_box(const SolutionConfig& cfg);

struct EnergyReport {
  double xi{0.0};
  QuadratureResult quad;    // integral of u^2 + p^2 over the box at xi
  bool boundary_ok{true};   // density negligible on the box boundary
  double boundary_max{0.0};
  Box4 box;                 // box actually integrated
  Box4 suggested_box;       // grown box to retry with when boundary_ok is false
};
EnergyReport energy_at(const Solution& sol, double xi, const GridSpec& n, int threads);

struct PlanckReport {
  QuadratureResult action;  // integral of the scaled obstruction density over box4
  double energy{0.0};       // E at mid-period
  double wavelength{0.0}, period{0.0}, frequency{0.0};
  double predicted{0.0};    // eps kappa E T
  double action_per_cycle{0.0};  // |action|, equals E T on solutions
  double rel_gap{0.0};
  bool support_ok{true};
  double boundary_max{0.0};
  Box4 box;
  Box4 suggested_box;
};
PlanckReport planck(const Solution& sol, const GridSpec& n, int nxi, int threads);

struct ScrewlineReport {
  double radius{0.0};     // transverse distance from the z axis
  double pitch_b{0.0};    // lambda / (2 pi)
  double curvature{0.0};  // R / (R^2 + b^2)
  double torsion{0.0};    // kappa b / (R^2 + b^2)
  double wavelength{0.0}, frequency{0.0}, period{0.0};
  bool in_disk{true};     // (x,y) inside the configured support disk
};
ScrewlineReport screwline(const SolutionConfig& cfg, double x, double y);

// Samples the state on grid cell centers at fixed time (xi = c t) and writes
// CSV columns x,y,z,t,u,p,phi,psi,energy_density with z fastest, x slowest.
void write_csv(std::ostream& os, const Solution& sol, const Box4& spatial, double t,
               const GridSpec& grid);

}  // namespace phlo
