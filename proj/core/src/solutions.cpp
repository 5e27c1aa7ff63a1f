#include "phlo/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "phlo/calculus.hpp"

namespace phlo {

namespace {

ScalarField expr_field(const std::string& text, const PhLOParams& prm) {
  dsl::NodePtr ast = dsl::parse(text);
  dsl::Bindings b = dsl::standard_bindings(prm.eps, prm.kappa, prm.l0);
  dsl::validate(ast, b);
  return dsl_field(std::move(ast), std::move(b));
}

double face_max(const ScalarField& f, const Box4& box, double xi, int axis, double at) {
  // Max of |f| on one spatial face, sampled on a 17x17 lattice.
  constexpr int kN = 16;
  int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
  double m = 0.0;
  for (int i = 0; i <= kN; ++i)
    for (int j = 0; j <= kN; ++j) {
      Point4 p;
      p[3] = xi;
      p[axis] = at;
      p[a1] = box.lo[a1] + (box.hi[a1] - box.lo[a1]) * i / kN;
      p[a2] = box.lo[a2] + (box.hi[a2] - box.lo[a2]) * j / kN;
      m = std::max(m, std::abs(f(p)));
    }
  return m;
}

double spatial_boundary_max(const ScalarField& f, const Box4& box, double xi) {
  double m = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    m = std::max(m, face_max(f, box, xi, axis, box.lo[axis]));
    m = std::max(m, face_max(f, box, xi, axis, box.hi[axis]));
  }
  return m;
}

Box4 grow_spatial(const Box4& box) {
  Box4 g = box;
  for (int d = 0; d < 3; ++d) {
    double c = 0.5 * (box.lo[d] + box.hi[d]);
    double h = 0.5 * (box.hi[d] - box.lo[d]);
    g.lo[d] = c - 1.5 * h;
    g.hi[d] = c + 1.5 * h;
  }
  return g;
}

}  // namespace

Solution build_solution(const SolutionConfig& cfg) {
  Solution sol;
  sol.cfg = cfg;

  if (!cfg.u_expr.empty() || !cfg.p_expr.empty()) {
    if (cfg.u_expr.empty() || cfg.p_expr.empty())
      throw std::runtime_error("custom state needs both u and p expressions");
    sol.u = expr_field(cfg.u_expr, cfg.prm);
    sol.p = expr_field(cfg.p_expr, cfg.prm);
    sol.analytic = false;
    return sol;
  }

  const double eps = cfg.prm.eps;
  const double lambda = cfg.prm.lambda();
  ScalarField x = coordinate(AX), y = coordinate(AY);
  ScalarField z = coordinate(AZ), xi = coordinate(AXI);

  // Transverse profile: compact bump in the squared distance from the disk
  // center, smooth everywhere.
  ScalarField dx = x - constant(cfg.center_a);
  ScalarField dy = y - constant(cfg.center_b);
  ScalarField r2 = dx * dx + dy * dy;
  ScalarField profile = constant(cfg.gamma) * bump_sq_field(r2 / constant(cfg.r0 * cfg.r0));

  // Longitudinal window on s = xi + eps z, supported on (0, lambda). Written
  // so the z and xi partials differ exactly by the factor eps and X(theta)
  // cancels to machine zero.
  ScalarField s = xi + constant(eps) * z;
  ScalarField theta = bump_field(constant(2.0 / lambda) * s - constant(1.0));

  ScalarField amp = profile * theta;

  const double rate = cfg.prm.kappa / cfg.prm.l0;
  ScalarField psi;
  if (cfg.family == SolutionConfig::Family::Psi1)
    psi = constant(-eps * rate) * z + constant(cfg.phi0);
  else
    psi = constant(rate) * xi + constant(cfg.phi0);

  sol.u = amp * cos_field(psi);
  sol.p = amp * sin_field(psi);
  sol.analytic = true;
  return sol;
}

Box4 support_box(const SolutionConfig& cfg, double xi) {
  if (cfg.box) return *cfg.box;
  const double lambda = cfg.prm.lambda();
  double za = cfg.prm.eps * (0.0 - xi);
  double zb = cfg.prm.eps * (lambda - xi);
  Box4 b;
  b.lo = {cfg.center_a - cfg.r0, cfg.center_b - cfg.r0, std::min(za, zb), 0.0};
  b.hi = {cfg.center_a + cfg.r0, cfg.center_b + cfg.r0, std::max(za, zb), lambda};
  return b;
}

Box4 support_box4(const SolutionConfig& cfg) {
  if (cfg.box) return *cfg.box;
  const double lambda = cfg.prm.lambda();
  Box4 b;
  b.lo = {cfg.center_a - cfg.r0, cfg.center_b - cfg.r0, -lambda, 0.0};
  b.hi = {cfg.center_a + cfg.r0, cfg.center_b + cfg.r0, lambda, lambda};
  return b;
}

Box4 probe_box(const SolutionConfig& cfg) {
  if (!cfg.u_expr.empty()) {
    if (cfg.box) {
      Box4 b = *cfg.box;
      for (int d = 0; d < kDim; ++d) {
        double c = 0.5 * (b.lo[d] + b.hi[d]);
        double h = 0.5 * (b.hi[d] - b.lo[d]);
        b.lo[d] = c - 0.7 * h;
        b.hi[d] = c + 0.7 * h;
      }
      return b;
    }
    return Box4{};
  }
  // Interior of the moving support: s = xi + eps z stays in (0.1, 0.9) lambda.
  const double lambda = cfg.prm.lambda();
  Box4 b;
  b.lo = {cfg.center_a - 0.7 * cfg.r0, cfg.center_b - 0.7 * cfg.r0, -0.2 * lambda,
          0.3 * lambda};
  b.hi = {cfg.center_a + 0.7 * cfg.r0, cfg.center_b + 0.7 * cfg.r0, 0.2 * lambda,
          0.7 * lambda};
  return b;
}

EnergyReport energy_at(const Solution& sol, double xi, const GridSpec& n, int threads) {
  EnergyReport rep;
  rep.xi = xi;
  ScalarField density = sol.u * sol.u + sol.p * sol.p;
  Box4 box = support_box(sol.cfg, xi);
  rep.box = box;
  rep.quad = integrate_spatial([density](const Point4& p) { return density(p); }, box, xi,
                               std::array<int, 3>{n.nx, n.ny, n.nz}, threads);
  rep.boundary_max = spatial_boundary_max(density, box, xi);
  rep.boundary_ok = rep.boundary_max <= 1e-12;
  rep.suggested_box = rep.boundary_ok ? box : grow_spatial(box);
  return rep;
}

PlanckReport planck(const Solution& sol, const GridSpec& n, int nxi, int threads) {
  PlanckReport rep;
  const SolutionConfig& cfg = sol.cfg;
  rep.wavelength = cfg.prm.lambda();
  rep.period = cfg.prm.period();
  rep.frequency = cfg.prm.frequency();

  PhLOState st = sol.state();
  AmplitudePhase ap = amplitude_phase(st);
  ScalarField integrand = constant(cfg.prm.l0 * cfg.prm.eps / cfg.prm.c) * ap.big_r;

  Box4 box = support_box4(cfg);
  rep.box = box;
  rep.action = integrate_box4([integrand](const Point4& p) { return integrand(p); }, box,
                              std::array<int, 4>{n.nx, n.ny, n.nz, nxi}, threads);

  // Density must die out on the spatial boundary at every sampled time.
  ScalarField density = st.phi_sq;
  double bmax = 0.0;
  for (int k = 0; k <= 4; ++k) {
    double xi = box.lo[3] + (box.hi[3] - box.lo[3]) * k / 4.0;
    bmax = std::max(bmax, spatial_boundary_max(density, box, xi));
  }
  rep.boundary_max = bmax;
  rep.support_ok = bmax <= 1e-12;
  rep.suggested_box = rep.support_ok ? box : grow_spatial(box);

  EnergyReport er = energy_at(sol, box.lo[3] + 0.5 * (box.hi[3] - box.lo[3]), n, threads);
  rep.energy = er.quad.refined;
  rep.predicted = cfg.prm.eps * cfg.prm.kappa * rep.energy * rep.period;
  rep.action_per_cycle = std::abs(rep.action.refined);
  double denom = std::max(std::abs(rep.predicted), 1e-12);
  rep.rel_gap = std::abs(rep.action.refined - rep.predicted) / denom;
  return rep;
}

ScrewlineReport screwline(const SolutionConfig& cfg, double x, double y) {
  ScrewlineReport r;
  r.radius = std::hypot(x, y);
  r.wavelength = cfg.prm.lambda();
  r.frequency = cfg.prm.frequency();
  r.period = cfg.prm.period();
  r.pitch_b = cfg.prm.lambda() / (2.0 * std::numbers::pi);
  double d = r.radius * r.radius + r.pitch_b * r.pitch_b;
  r.curvature = r.radius / d;
  r.torsion = cfg.prm.kappa * r.pitch_b / d;
  r.in_disk = std::hypot(x - cfg.center_a, y - cfg.center_b) <= cfg.r0;
  return r;
}

void write_csv(std::ostream& os, const Solution& sol, const Box4& spatial, double t,
               const GridSpec& grid) {
  ScalarField phi = sqrt_field(sol.u * sol.u + sol.p * sol.p);
  ScalarField psi = atan2_field(sol.p, sol.u);
  double xi = sol.cfg.prm.c * t;
  double hx = (spatial.hi[0] - spatial.lo[0]) / grid.nx;
  double hy = (spatial.hi[1] - spatial.lo[1]) / grid.ny;
  double hz = (spatial.hi[2] - spatial.lo[2]) / grid.nz;

  os << "x,y,z,t,u,p,phi,psi,energy_density\n";
  char buf[64];
  auto put = [&](double v, char sep) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf << sep;
  };
  for (int ix = 0; ix < grid.nx; ++ix)
    for (int iy = 0; iy < grid.ny; ++iy)
      for (int iz = 0; iz < grid.nz; ++iz) {
        Point4 p;
        p[0] = spatial.lo[0] + (ix + 0.5) * hx;
        p[1] = spatial.lo[1] + (iy + 0.5) * hy;
        p[2] = spatial.lo[2] + (iz + 0.5) * hz;
        p[3] = xi;
        double u = sol.u(p), pp = sol.p(p);
        put(p[0], ',');
        put(p[1], ',');
        put(p[2], ',');
        put(t, ',');
        put(u, ',');
        put(pp, ',');
        put(phi(p), ',');
        put(psi(p), ',');
        std::snprintf(buf, sizeof buf, "%.17g", u * u + pp * pp);
        os << buf << '\n';
      }
}

}  // namespace phlo
