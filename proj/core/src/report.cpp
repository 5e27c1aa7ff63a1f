#include "phlo/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

#include "json.hpp"

#include "phlo/calculus.hpp"
#include "phlo/parallel.hpp"
#include "phlo/probes.hpp"

namespace phlo {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string g17(double v) { return fmt("%.17g", v); }

PFormField basis_one_form(int axis) {
  PFormField w = PFormField::zero(1);
  w.comp[axis] = constant(1.0);
  return w;
}

std::vector<ScalarField> comps(const ScalarField& f) { return {f}; }

std::vector<ScalarField> comps(const VectorField4& v) {
  return {v.comp[0], v.comp[1], v.comp[2], v.comp[3]};
}

std::vector<ScalarField> comps(const PFormField& w) {
  std::vector<ScalarField> out;
  for (int k = 0; k < w.count(); ++k) out.push_back(w.comp[k]);
  return out;
}

std::vector<ScalarField> comps(const Tensor11Field& t) {
  std::vector<ScalarField> out;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) out.push_back(t.m[r][c]);
  return out;
}

double max_abs(const std::vector<ScalarField>& fs, const std::vector<Point4>& probes,
               int threads) {
  double m = 0.0;
  for (const ScalarField& f : fs) {
    if (f.is_constant()) {
      m = std::max(m, std::abs(f.constant_value()));
      continue;
    }
    m = std::max(m, max_chunked(probes.size(), threads,
                                [&](std::size_t i) { return std::abs(f(probes[i])); }));
  }
  return m;
}

// A stage reports one scaled residual so that pass == (residual <= tolerance)
// even when its sub-checks carry different gates; the note names the checks.
class Stage {
 public:
  Stage(std::string name, std::string cls, double tol) {
    res_.name = std::move(name);
    res_.classification = std::move(cls);
    res_.tolerance = tol;
  }

  void add(double residual, double tol) { ratio_ = std::max(ratio_, residual / tol); }
  void probes(std::size_t n) { res_.probe_count = n; }
  void note(const std::string& n) { res_.note = n; }
  void append_note(const std::string& n) {
    if (!res_.note.empty()) res_.note += "; ";
    res_.note += n;
  }

  InvariantResult finish() const {
    InvariantResult r = res_;
    r.max_residual = ratio_ * r.tolerance;
    r.pass = r.max_residual <= r.tolerance;
    return r;
  }

 private:
  InvariantResult res_;
  double ratio_{0.0};
};

// Deterministic uniform draw in [lo, hi); does not depend on distribution
// internals of the standard library.
double draw_uniform(std::mt19937_64& rng, double lo, double hi) {
  double t = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * t;
}

}  // namespace

SuiteReport run_suite(const Solution& sol, const SuiteOptions& opt) {
  const SolutionConfig& cfg = sol.cfg;
  const PhLOParams& prm = cfg.prm;
  const DerivProvider& prov = cfg.prov;
  const Tolerances& tol = opt.tol;
  const double dyn = tol.dynamical(prov);
  const double rate = prm.kappa / prm.l0;
  const int threads = opt.threads > 0 ? opt.threads : default_threads();

  SuiteReport rep;
  rep.cfg = cfg;
  rep.seed = cfg.seed;
  rep.provider = prov.mode == DerivProvider::Mode::Dual ? "dual" : "fd";

  auto run_stage = [&rep](Stage& s, const char* name, auto&& body) {
    try {
      body(s);
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string("stage '") + name + "': " + e.what());
    }
    rep.results.push_back(s.finish());
  };
#define STAGE(NAME, CLS, TOL, ...)      \
  {                                     \
    Stage s(NAME, CLS, TOL);            \
    run_stage(s, NAME, __VA_ARGS__);    \
  }

  Box4 generic_box = cfg.box ? *cfg.box : Box4{};
  std::vector<Point4> gprobes = halton_probes(opt.probe_count, generic_box, cfg.seed);
  std::vector<Point4> sprobes = halton_probes(opt.probe_count, probe_box(cfg), cfg.seed + 1);
  std::vector<Point4> all_probes = gprobes;
  all_probes.insert(all_probes.end(), sprobes.begin(), sprobes.end());

  PhLOState st = build_state(sol.u, sol.p, prm, prov);
  ProjectionSet proj = build_projections(st.u, st.p, prm.eps);
  ConnectionCurvature cc = connection_curvature(st.u, st.p, prm.eps, prov);

  // Amplitude mask: points where the state is appreciably nonzero.
  std::vector<Point4> masked;
  double phi_max = 0.0;
  {
    std::vector<double> phi(all_probes.size());
    for (std::size_t i = 0; i < all_probes.size(); ++i) {
      phi[i] = std::sqrt(st.phi_sq(all_probes[i]));
      phi_max = std::max(phi_max, phi[i]);
    }
    for (std::size_t i = 0; i < all_probes.size(); ++i)
      if (phi[i] > 1e-6 * phi_max) masked.push_back(all_probes[i]);
  }

  STAGE("star convention lock", "structural", tol.structural, [&](Stage& s) {
    s.add(max_abs(comps(hodge(st.F) - wedge(st.A_star, st.zeta)), gprobes, threads),
          tol.structural);
    s.add(max_abs(comps(hodge(st.F_star) + st.F), gprobes, threads), tol.structural);
    s.probes(gprobes.size());
    s.note("*(A^zeta) == A*^zeta and ** == -1 on 2-forms");
  });

  STAGE("projection idempotence", "structural", tol.structural, [&](Stage& s) {
    Tensor11Field id = constant_tensor(mat4_identity());
    for (const Tensor11Field* q : {&proj.v, &proj.h, &proj.vt, &proj.ht})
      s.add(max_abs(comps(compose(*q, *q) - *q), gprobes, threads), tol.structural);
    s.add(max_abs(comps(proj.v + proj.h - id), gprobes, threads), tol.structural);
    s.add(max_abs(comps(proj.vt + proj.ht - id), gprobes, threads), tol.structural);
    s.probes(gprobes.size());
    s.note("P o P == P for both pairs; complements sum to the identity");
  });

  STAGE("curvature closed form", "structural", tol.structural, [&](Stage& s) {
    const int zx[2] = {AZ, AXI};
    int slot = slot_of(2, zx);
    VectorValued2Form nj = nijenhuis(proj.v, prov);
    s.add(max_abs(comps(nj.pair_comp[slot] - cc.z1), gprobes, threads), tol.structural);
    VectorValued2Form rv = distribution_curvature(proj.v, proj.h, prov);
    s.add(max_abs(comps(rv.pair_comp[slot] - cc.z1), gprobes, threads), tol.structural);
    VectorValued2Form rt = distribution_curvature(proj.vt, proj.ht, prov);
    s.add(max_abs(comps(rt.pair_comp[slot] - cc.z2), gprobes, threads), tol.structural);
    s.probes(gprobes.size());
    s.note("torsion and bracket curvature on (d_z, d_xi) match the closed pair");
  });

  STAGE("curvature scale and length", "dynamical", dyn, [&](Stage& s) {
    // Trace identity: (V* dx ^ V* dy)(Z1, Z2) = eps K^2 for any state.
    PFormField w = wedge(apply_cotangent(proj.v_star, basis_one_form(AX)),
                         apply_cotangent(proj.v_star, basis_one_form(AY)));
    ScalarField tr = interior(cc.z2, interior(cc.z1, w)).comp[0];
    s.add(max_abs(comps(tr - constant(prm.eps) * cc.ksq), gprobes, threads), tol.structural);

    // Length recovery at masked probes, relative to the configured value.
    const double l0_tol = prov.mode == DerivProvider::Mode::Dual ? 1e-6 : 1e-3;
    ScalarField l0sq = l0_squared_field(st.phi_sq, cc.ksq);
    std::size_t degenerate = 0, used = 0;
    double worst = 0.0;
    for (const Point4& pt : masked) {
      if (cc.ksq(pt) <= 1e-30) {
        ++degenerate;
        continue;
      }
      ++used;
      worst = std::max(worst, std::abs(std::sqrt(l0sq(pt)) - prm.l0) / prm.l0);
    }
    if (masked.empty()) {
      s.append_note("l0 undefined (zero amplitude)");
    } else if (used == 0) {
      s.append_note("l0 undefined (plane-wave degenerate)");
    } else {
      s.add(worst, l0_tol);
      if (degenerate > 0) s.append_note("some probes plane-wave degenerate");
    }

    // Invariance of the recovered length under companion mixing.
    if (used > 0) {
      std::mt19937_64 rng(cfg.seed * 1000003ull + 17ull);
      double drift = 0.0;
      for (int k = 0; k < 5; ++k) {
        double ma = 0.0, mb = 0.0;
        do {
          ma = draw_uniform(rng, -2.0, 2.0);
          mb = draw_uniform(rng, -2.0, 2.0);
        } while (ma * ma + mb * mb < 1e-4);
        auto [u2, p2] = dual_mix(st.u, st.p, prm.eps, ma, mb);
        ConnectionCurvature cc2 = connection_curvature(u2, p2, prm.eps, prov);
        ScalarField l0sq2 = l0_squared_field(u2 * u2 + p2 * p2, cc2.ksq);
        for (const Point4& pt : masked) {
          if (cc.ksq(pt) <= 1e-30) continue;
          drift = std::max(drift, std::abs(std::sqrt(l0sq2(pt)) - std::sqrt(l0sq(pt))));
        }
      }
      s.add(drift, 1e-10);
      s.append_note("5 mix draws");
    }
    s.probes(masked.size());
  });

  STAGE("transport equations", "dynamical", dyn, [&](Stage& s) {
    EomResiduals eom = eom_residuals(st, proj);
    s.add(max_abs(comps(eom.scalar_u), all_probes, threads), dyn);
    s.add(max_abs(comps(eom.scalar_p), all_probes, threads), dyn);
    s.add(max_abs(comps(eom.form), all_probes, threads), dyn);
    s.add(max_abs(comps(eom.tensor), all_probes, threads), dyn);
    s.probes(all_probes.size());
    s.note("scalar, form, and projector presentations of the motion law");
  });

  ExchangeFluxes ex = exchange_fluxes(st, cc);

  STAGE("exchange antisymmetry", "structural", tol.structural, [&](Stage& s) {
    s.add(max_abs(comps(ex.i_z1_f - ex.i_z2_sf), gprobes, threads), tol.structural);
    s.add(max_abs(comps(ex.i_z1_sf + ex.i_z2_f), gprobes, threads), tol.structural);
    s.add(max_abs(comps(ex.i_z1_f - ex.coeff_energy * st.zeta), gprobes, threads),
          tol.structural);
    s.add(max_abs(comps(ex.i_z2_f - ex.coeff_r * st.zeta), gprobes, threads), tol.structural);
    s.probes(gprobes.size());
    s.note("i(Z1)F == i(Z2)*F, i(Z1)*F == -i(Z2)F, both along zeta");
  });

  STAGE("zero invariants", "structural", tol.structural, [&](Stage& s) {
    s.add(max_abs(comps(invariant_contraction(st.F, st.F)), gprobes, threads), tol.structural);
    s.add(max_abs(comps(invariant_contraction(st.F, st.F_star)), gprobes, threads),
          tol.structural);
    s.probes(gprobes.size());
    s.note("both quadratic field invariants vanish identically");
  });

  Tensor11Field stress = stress_tensor(st);

  STAGE("null stress", "structural", tol.structural, [&](Stage& s) {
    ScalarField tt = trace(compose(stress, stress));
    ScalarField fro = constant(0.0);
    for (int r = 0; r < kDim; ++r)
      for (int c = 0; c < kDim; ++c) fro = fro + stress.m[r][c] * stress.m[r][c];
    double worst = max_chunked(gprobes.size(), threads, [&](std::size_t i) {
      return std::abs(tt(gprobes[i])) / std::max(fro(gprobes[i]), 1e-30);
    });
    s.add(worst, tol.structural);
    s.probes(gprobes.size());
    s.note("T_{mu nu} T^{mu nu} == 0, relative to |T|^2");
  });

  STAGE("stress divergence", "dynamical", dyn, [&](Stage& s) {
    PFormField direct = stress_divergence_direct(stress, prov);
    PFormField flux = stress_divergence_flux(st);
    s.add(max_abs(comps(direct - flux), gprobes, threads), dyn);
    s.add(max_abs(comps(direct), sprobes, threads), dyn);
    s.probes(gprobes.size() + sprobes.size());
    s.note("derivative form matches flux form; zero on solutions");
  });

  STAGE("charge-free residuals", "dynamical", dyn, [&](Stage& s) {
    EedResiduals eed = eed_residuals(st);
    s.add(max_abs(comps(eed.r_ff), all_probes, threads), dyn);
    s.add(max_abs(comps(eed.r_ss), all_probes, threads), dyn);
    s.add(max_abs(comps(eed.r_mix), all_probes, threads), dyn);
    s.probes(all_probes.size());
    s.note("both contraction residual families vanish");
  });

  AmplitudePhase ap = amplitude_phase(st);

  STAGE("amplitude and phase transport", "dynamical", dyn, [&](Stage& s) {
    s.add(max_abs(comps(ap.x_phi_sq), all_probes, threads), dyn);
    s.add(max_abs(comps(constant(prm.kappa * prm.l0) * ap.big_r - st.phi_sq), all_probes,
                  threads),
          dyn);
    double worst = 0.0;
    for (const Point4& pt : masked) worst = std::max(worst, std::abs(ap.x_psi(pt) - rate));
    if (!masked.empty()) s.add(worst, dyn);
    s.probes(masked.size());
    s.note("amplitude rides along X; phase advances at kappa / l0");
  });

  STAGE("frame rotation", "dynamical", dyn, [&](Stage& s) {
    FrameRotation fr = frame_rotation(st);
    // Every quantity here is a derivative divided by Phi^2, so fd error is
    // amplified near the edge of the mask; the dual provider is immune.
    const double rot_tol = prov.mode == DerivProvider::Mode::Dual ? dyn : 1e-3;
    double r_solve = 0.0, r_pattern = 0.0;
    std::size_t used = 0;
    for (const Point4& pt : masked) {
      FrameRotation::Sample sm = fr.solve(pt);
      if (!sm.ok) continue;
      ++used;
      r_solve = std::max({r_solve, std::abs(sm.alpha - fr.alpha(pt)),
                          std::abs(sm.beta - fr.beta(pt)), std::abs(sm.gamma - fr.gamma(pt)),
                          std::abs(sm.delta - fr.delta(pt))});
      r_pattern = std::max({r_pattern, std::abs(fr.alpha(pt)), std::abs(fr.delta(pt)),
                            std::abs(fr.beta(pt) - prm.eps * rate),
                            std::abs(fr.gamma(pt) + prm.eps * rate)});
    }
    if (used > 0) {
      s.add(r_solve, rot_tol);
      s.add(r_pattern, rot_tol);
    } else {
      s.append_note("frame degenerate everywhere sampled");
    }
    s.probes(used);
    s.note("solved coefficients match closed forms; quarter-turn pattern");
  });

  STAGE("shuffling symmetry", "dynamical", dyn, [&](Stage& s) {
    ScalarField kl0 = constant(prm.kappa * prm.l0);
    s.add(max_abs(comps(kl0 * cc.z1 - st.Abar_star), all_probes, threads), dyn);
    s.add(max_abs(comps(kl0 * cc.z2 + st.Abar), all_probes, threads), dyn);
    s.probes(all_probes.size());
    s.note("kappa l0 Z1 == raised A*, kappa l0 Z2 == -raised A");
  });

  STAGE("integrability obstruction equality", "structural", tol.structural, [&](Stage& s) {
    WedgeObstruction wo = wedge_obstruction(st);
    s.add(max_abs(comps(wo.coeff_a - wo.coeff_as), gprobes, threads), tol.structural);
    s.add(max_abs(comps(wo.coeff_a - wo.closed), gprobes, threads), tol.structural);
    s.probes(gprobes.size());
    s.note("dA^A^zeta == dA*^A*^zeta == eps R vol");
  });

  STAGE("action quantum", "dynamical", tol.quadrature, [&](Stage& s) {
    PlanckReport pr = planck(sol, opt.quad_grid, opt.quad_nxi, threads);
    s.add(pr.boundary_max, 1e-12);
    if (!pr.support_ok) s.append_note("support not compact on box");
    s.add(pr.rel_gap, tol.quadrature);
    s.add(pr.action.error_estimate / std::max(std::abs(pr.predicted), 1e-12), tol.quadrature);
    s.probes(static_cast<std::size_t>(opt.quad_grid.nx) * opt.quad_grid.ny *
             opt.quad_grid.nz * opt.quad_nxi);
    s.append_note("E=" + g17(pr.energy) + " T=" + g17(pr.period) +
                  " h=" + g17(pr.action_per_cycle) + " nu=" + g17(pr.frequency));
  });

#undef STAGE

  rep.all_pass = true;
  for (const InvariantResult& r : rep.results) rep.all_pass = rep.all_pass && r.pass;
  return rep;
}

namespace {

std::vector<std::pair<std::string, std::string>> config_echo(const SolutionConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("epsilon", g17(cfg.prm.eps));
  kv.emplace_back("kappa", g17(cfg.prm.kappa));
  kv.emplace_back("l0", g17(cfg.prm.l0));
  kv.emplace_back("c", g17(cfg.prm.c));
  kv.emplace_back("a", g17(cfg.center_a));
  kv.emplace_back("b", g17(cfg.center_b));
  kv.emplace_back("r0", g17(cfg.r0));
  kv.emplace_back("gamma", g17(cfg.gamma));
  kv.emplace_back("phi0", g17(cfg.phi0));
  kv.emplace_back("phase_family",
                  cfg.family == SolutionConfig::Family::Psi1 ? "psi1" : "psi2");
  if (!cfg.u_expr.empty()) {
    kv.emplace_back("u_expr", cfg.u_expr);
    kv.emplace_back("p_expr", cfg.p_expr);
  }
  kv.emplace_back("provider",
                  cfg.prov.mode == DerivProvider::Mode::Dual ? "dual" : "fd");
  kv.emplace_back("fd_step", g17(cfg.prov.h));
  kv.emplace_back("seed", std::to_string(cfg.seed));
  kv.emplace_back("grid.nx", std::to_string(cfg.grid.nx));
  kv.emplace_back("grid.ny", std::to_string(cfg.grid.ny));
  kv.emplace_back("grid.nz", std::to_string(cfg.grid.nz));
  if (cfg.box) {
    static const char* ax[4] = {"x", "y", "z", "xi"};
    for (int d = 0; d < kDim; ++d) {
      kv.emplace_back(std::string("box.") + ax[d] + "lo", g17(cfg.box->lo[d]));
      kv.emplace_back(std::string("box.") + ax[d] + "hi", g17(cfg.box->hi[d]));
    }
  }
  return kv;
}

}  // namespace

void render_text(std::ostream& os, const SuiteReport& rep) {
  os << "invariant suite\n";
  os << "provider = " << rep.provider << "\n";
  os << "seed = " << rep.seed << "\n";
  os << "config:\n";
  for (const auto& [k, v] : config_echo(rep.cfg)) os << "  " << k << " = " << v << "\n";
  os << "checks:\n";
  char line[160];
  int idx = 0;
  for (const InvariantResult& r : rep.results) {
    std::snprintf(line, sizeof line, "  [%2d] %s %-10s %-36s %11.3e <= %7.1e  n=%zu",
                  ++idx, r.pass ? "pass" : "FAIL", r.classification.c_str(), r.name.c_str(),
                  r.max_residual, r.tolerance, r.probe_count);
    os << line << "\n";
    if (!r.note.empty()) os << "        " << r.note << "\n";
  }
  std::size_t passed = 0;
  for (const InvariantResult& r : rep.results) passed += r.pass ? 1 : 0;
  os << "suite: " << (rep.all_pass ? "pass" : "FAIL") << " (" << passed << "/"
     << rep.results.size() << ")\n";
}

void render_machine(std::ostream& os, const SuiteReport& rep) {
  nlohmann::ordered_json j;
  j["provider"] = rep.provider;
  j["seed"] = rep.seed;
  nlohmann::ordered_json jc;
  for (const auto& [k, v] : config_echo(rep.cfg)) jc[k] = v;
  j["config"] = jc;
  j["invariants"] = nlohmann::ordered_json::array();
  for (const InvariantResult& r : rep.results) {
    nlohmann::ordered_json ji;
    ji["name"] = r.name;
    ji["class"] = r.classification;
    ji["probes"] = r.probe_count;
    ji["max_residual"] = r.max_residual;
    ji["tolerance"] = r.tolerance;
    ji["pass"] = r.pass;
    ji["note"] = r.note;
    j["invariants"].push_back(ji);
  }
  j["all_pass"] = rep.all_pass;
  os << j.dump(2) << "\n";
}

}  // namespace phlo
