#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "phlo/config.hpp"
#include "phlo/connections.hpp"
#include "phlo/parallel.hpp"
#include "phlo/probes.hpp"
#include "phlo/projections.hpp"
#include "phlo/report.hpp"
#include "phlo/solutions.hpp"

namespace {

using namespace phlo;

constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

SolutionConfig load_config(const std::string& path) {
  if (path.empty()) return SolutionConfig{};
  return parse_config_file(path);
}

bool parse_grid(const std::string& text, GridSpec& grid) {
  int nx = 0, ny = 0, nz = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d,%d,%d%c", &nx, &ny, &nz, &tail) != 3) return false;
  if (nx < 1 || ny < 1 || nz < 1) return false;
  grid = GridSpec{nx, ny, nz};
  return true;
}

ScalarField field_from_text(const std::string& src, const dsl::Bindings& bound) {
  dsl::NodePtr ast = dsl::parse(src);
  dsl::validate(ast, bound);
  return dsl_field(ast, bound);
}

void print_field_stats(const char* label, const ScalarField& f,
                       const std::vector<Point4>& probes) {
  double lo = 0.0, hi = 0.0, sum = 0.0;
  bool first = true;
  for (const Point4& pt : probes) {
    double v = f(pt);
    if (first) {
      lo = hi = v;
      first = false;
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
  }
  std::printf("  %-8s min=% .6e  max=% .6e  mean=% .6e\n", label, lo, hi,
              sum / static_cast<double>(probes.size()));
}

void print_frobenius(const char* label, const FrobeniusReport& fr) {
  std::printf("%s: %s (max residual %.3e, tol %.1e, %zu probes)\n", label,
              fr.integrable ? "integrable" : "NOT integrable", fr.max_residual, fr.tol,
              fr.probe_count);
  if (!fr.integrable) {
    for (const FrobeniusPair& pr : fr.pairs) {
      if (pr.max_residual_norm <= fr.tol) continue;
      std::printf("  pair (%d,%d) worst at (% .4f, % .4f, % .4f, % .4f), |residual| = %.3e\n",
                  pr.gi, pr.gj, pr.worst_probe.x, pr.worst_probe.y, pr.worst_probe.z,
                  pr.worst_probe.xi, pr.max_residual_norm);
    }
  }
}

int cmd_verify(const std::string& config_path, const std::string& provider_flag,
               double fd_step, long long seed_flag, const std::string& format, int threads) {
  SolutionConfig cfg;
  try {
    cfg = load_config(config_path);
    if (!provider_flag.empty()) {
      if (provider_flag == "dual") {
        cfg.prov = DerivProvider::dual();
      } else if (provider_flag == "fd") {
        cfg.prov = DerivProvider::finite_difference(fd_step > 0 ? fd_step : cfg.prov.h);
      } else {
        std::cerr << "unknown provider '" << provider_flag << "' (expected dual or fd)\n";
        return kExitUsage;
      }
    } else if (fd_step > 0) {
      cfg.prov.h = fd_step;
    }
    if (seed_flag >= 0) cfg.seed = static_cast<std::uint64_t>(seed_flag);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  Solution sol;
  try {
    sol = build_solution(cfg);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  SuiteOptions opt;
  opt.threads = threads;
  try {
    SuiteReport rep = run_suite(sol, opt);
    if (format == "machine")
      render_machine(std::cout, rep);
    else
      render_text(std::cout, rep);
    return rep.all_pass ? 0 : kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInvariant;
  }
}

int cmd_curvature(const std::string& u_src, const std::string& p_src, double eps,
                  std::size_t probes) {
  if (eps != 1.0 && eps != -1.0) {
    std::cerr << "--epsilon must be 1 or -1\n";
    return kExitUsage;
  }
  PhLOParams prm;
  prm.eps = eps;
  dsl::Bindings bound = dsl::standard_bindings(prm.eps, prm.kappa, prm.l0);

  ScalarField u, p;
  try {
    u = field_from_text(u_src, bound);
    p = field_from_text(p_src, bound);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  DerivProvider prov = DerivProvider::dual();
  std::vector<Point4> pts = halton_probes(probes, Box4{}, 42);

  ConnectionCurvature cc = connection_curvature(u, p, eps, prov);
  std::printf("curvature of the state connection (epsilon = %+.0f, %zu probes)\n", eps,
              pts.size());
  std::printf("Z1 components (x, y; z and xi vanish identically):\n");
  print_field_stats("Z1.x", cc.z1.comp[AX], pts);
  print_field_stats("Z1.y", cc.z1.comp[AY], pts);
  std::printf("Z2 components:\n");
  print_field_stats("Z2.x", cc.z2.comp[AX], pts);
  print_field_stats("Z2.y", cc.z2.comp[AY], pts);
  std::printf("curvature magnitude K^2 = |Z1|^2 = |Z2|^2:\n");
  print_field_stats("K^2", cc.ksq, pts);

  L0Summary l0 = l0_summary(u * u + p * p, cc.ksq, pts);
  if (l0.defined_count == 0) {
    std::printf("l0: undefined at all probes (%s)\n", l0.note.c_str());
  } else {
    std::printf("l0 over %zu of %zu probes: min=%.9e max=%.9e mean=%.9e\n", l0.defined_count,
                pts.size(), l0.min, l0.max, l0.mean);
    if (l0.undefined_count > 0)
      std::printf("  (%zu probes degenerate: %s)\n", l0.undefined_count, l0.note.c_str());
  }

  ProjectionSet proj = build_projections(u, p, eps);
  Distribution horizontal{{apply(proj.h, constant_vector({0.0, 0.0, 1.0, 0.0})),
                           apply(proj.h, constant_vector({0.0, 0.0, 0.0, 1.0}))}};
  Distribution transverse{{constant_vector({1.0, 0.0, 0.0, 0.0}),
                           constant_vector({0.0, 1.0, 0.0, 0.0})}};
  try {
    print_frobenius("horizontal span(H d_z, H d_xi)", frobenius(horizontal, pts, 1e-8, prov));
    print_frobenius("transverse span(d_x, d_y)", frobenius(transverse, pts, 1e-8, prov));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}

int cmd_energy(const std::string& config_path, const std::string& grid_text, double xi_flag,
               bool xi_set, int threads) {
  SolutionConfig cfg;
  Solution sol;
  try {
    cfg = load_config(config_path);
    sol = build_solution(cfg);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  GridSpec grid = cfg.grid;
  if (!grid_text.empty() && !parse_grid(grid_text, grid)) {
    std::cerr << "bad --grid '" << grid_text << "' (expected NX,NY,NZ)\n";
    return kExitUsage;
  }
  double xi = xi_set ? xi_flag : 0.5 * cfg.prm.lambda();

  EnergyReport er = energy_at(sol, xi, grid, threads);
  std::printf("energy slice at xi = %.17g (grid %dx%dx%d)\n", er.xi, grid.nx, grid.ny,
              grid.nz);
  std::printf("  E          = %.17g\n", er.quad.refined);
  std::printf("  richardson = %.3e\n", er.quad.error_estimate);
  std::printf("  box        = [%g,%g]x[%g,%g]x[%g,%g]\n", er.box.lo[0], er.box.hi[0],
              er.box.lo[1], er.box.hi[1], er.box.lo[2], er.box.hi[2]);
  if (!er.boundary_ok) {
    std::printf("  support truncated: boundary density %.3e; retry with box "
                "[%g,%g]x[%g,%g]x[%g,%g]\n",
                er.boundary_max, er.suggested_box.lo[0], er.suggested_box.hi[0],
                er.suggested_box.lo[1], er.suggested_box.hi[1], er.suggested_box.lo[2],
                er.suggested_box.hi[2]);
    return kExitInvariant;
  }
  return 0;
}

int cmd_planck(const std::string& config_path, const std::string& grid_text, int threads) {
  SolutionConfig cfg;
  Solution sol;
  try {
    cfg = load_config(config_path);
    sol = build_solution(cfg);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  GridSpec grid = cfg.grid;
  if (!grid_text.empty() && !parse_grid(grid_text, grid)) {
    std::cerr << "bad --grid '" << grid_text << "' (expected NX,NY,NZ)\n";
    return kExitUsage;
  }

  PlanckReport pr = planck(sol, grid, grid.nz, threads);
  std::printf("action integral over one period (grid %dx%dx%dx%d)\n", grid.nx, grid.ny,
              grid.nz, grid.nz);
  std::printf("  E (energy)      = %.17g\n", pr.energy);
  std::printf("  T (period)      = %.17g\n", pr.period);
  std::printf("  nu (frequency)  = %.17g\n", pr.frequency);
  std::printf("  E*T             = %.17g\n", pr.energy * pr.period);
  std::printf("  H (action)      = %.17g\n", pr.action.refined);
  std::printf("  action per cycle= %.17g\n", pr.action_per_cycle);
  std::printf("  mismatch        = %.3e (relative to E*T)\n", pr.rel_gap);
  std::printf("  richardson      = %.3e\n", pr.action.error_estimate);
  if (pr.action.error_estimate >
      0.01 * std::max(std::abs(pr.predicted), 1e-12)) {
    std::printf("  warning: grid too coarse for a 1%% verdict; try --grid %d,%d,%d\n",
                2 * grid.nx, 2 * grid.ny, 2 * grid.nz);
  }
  if (!pr.support_ok) {
    std::printf("  support truncated: boundary density %.3e; retry with box "
                "[%g,%g]x[%g,%g]x[%g,%g]\n",
                pr.boundary_max, pr.suggested_box.lo[0], pr.suggested_box.hi[0],
                pr.suggested_box.lo[1], pr.suggested_box.hi[1], pr.suggested_box.lo[2],
                pr.suggested_box.hi[2]);
    return kExitInvariant;
  }
  return 0;
}

int cmd_emit(const std::string& config_path, double t, const std::string& out_path,
             const std::string& grid_text) {
  SolutionConfig cfg;
  Solution sol;
  try {
    cfg = load_config(config_path);
    sol = build_solution(cfg);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  GridSpec grid = cfg.grid;
  if (!grid_text.empty() && !parse_grid(grid_text, grid)) {
    std::cerr << "bad --grid '" << grid_text << "' (expected NX,NY,NZ)\n";
    return kExitUsage;
  }
  Box4 spatial = cfg.box ? *cfg.box : support_box(cfg, cfg.prm.c * t);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open '" << out_path << "' for writing\n";
    return kExitUsage;
  }
  write_csv(out, sol, spatial, t, grid);
  out.flush();
  if (!out) {
    std::cerr << "write to '" << out_path << "' failed\n";
    return kExitUsage;
  }
  return 0;
}

int cmd_parse_check(const std::string& src) {
  PhLOParams prm;
  dsl::Bindings bound = dsl::standard_bindings(prm.eps, prm.kappa, prm.l0);
  try {
    dsl::NodePtr ast = dsl::parse(src);
    dsl::validate(ast, bound);
    std::cout << dsl::pretty(ast) << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photon-like field toolkit: verification, curvature, energy and emission"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads,
                 "worker threads (default: PHLO_THREADS env var, else hardware)");

  std::string config_path, provider_flag, format = "text";
  double fd_step = 0.0;
  long long seed_flag = -1;
  CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
  verify->add_option("--config", config_path, "configuration file (defaults when absent)");
  verify->add_option("--provider", provider_flag, "derivative provider: dual | fd");
  verify->add_option("--fd-step", fd_step, "step for the fd provider");
  verify->add_option("--seed", seed_flag, "probe sequence seed override");
  verify->add_option("--format", format, "text | machine")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string u_src = "0", p_src = "0";
  double eps = -1.0;
  std::size_t probes = 1000;
  CLI::App* curvature = app.add_subcommand("curvature", "curvature report for DSL fields");
  curvature->add_option("--u", u_src, "first component expression")->required();
  curvature->add_option("--p", p_src, "second component expression")->required();
  curvature->add_option("--epsilon", eps, "helicity sign, +1 or -1");
  curvature->add_option("--probes", probes, "sample count");

  std::string e_config, e_grid;
  double xi_flag = 0.0;
  CLI::App* energy = app.add_subcommand("energy", "integrate the energy density on a slice");
  energy->add_option("--config", e_config, "configuration file");
  energy->add_option("--grid", e_grid, "NX,NY,NZ cell counts");
  CLI::Option* xi_opt = energy->add_option("--xi", xi_flag, "slice coordinate (default: mid-period)");

  std::string p_config, p_grid;
  CLI::App* planck_cmd = app.add_subcommand("planck", "action integral over one period");
  planck_cmd->add_option("--config", p_config, "configuration file");
  planck_cmd->add_option("--grid", p_grid, "NX,NY,NZ cell counts (xi count = NZ)");

  std::string m_config, m_grid, out_path;
  double t_flag = 0.0;
  CLI::App* emit = app.add_subcommand("emit", "write the sampled state as CSV");
  emit->add_option("--config", m_config, "configuration file");
  emit->add_option("--t", t_flag, "time of the sampled slice");
  emit->add_option("--out", out_path, "output path")->required();
  emit->add_option("--grid", m_grid, "NX,NY,NZ cell counts");

  std::string check_src;
  CLI::App* parse_check = app.add_subcommand("parse-check", "validate a DSL expression");
  parse_check->add_option("expr", check_src, "expression text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (verify->parsed())
    return cmd_verify(config_path, provider_flag, fd_step, seed_flag, format, threads);
  if (curvature->parsed()) return cmd_curvature(u_src, p_src, eps, probes);
  if (energy->parsed())
    return cmd_energy(e_config, e_grid, xi_flag, xi_opt->count() > 0, threads);
  if (planck_cmd->parsed()) return cmd_planck(p_config, p_grid, threads);
  if (emit->parsed()) return cmd_emit(m_config, t_flag, out_path, m_grid);
  if (parse_check->parsed()) return cmd_parse_check(check_src);
  return kExitUsage;
}
