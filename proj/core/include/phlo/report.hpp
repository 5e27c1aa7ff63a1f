#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "phlo/solutions.hpp"

// The invariant suite: every identity of the model checked at seeded probe
// points, classified as structural (holds for any field pair) or dynamical
// (holds only on solutions), with one deterministic report per run.

namespace phlo {

struct Tolerances {
  double structural{1e-10};
  double dynamical_dual{1e-8};
  double dynamical_fd{1e-5};
  double quadrature{1e-2};

  double dynamical(const DerivProvider& prov) const {
    return prov.mode == DerivProvider::Mode::Dual ? dynamical_dual : dynamical_fd;
  }
};

struct InvariantResult {
  std::string name;
  std::string classification;  // "structural" or "dynamical"
  std::size_t probe_count{0};
  double max_residual{0.0};    // scaled so that pass == (max_residual <= tolerance)
  double tolerance{0.0};
  bool pass{false};
  std::string note;            // which identity, plus any irregularities
};

struct SuiteReport {
  SolutionConfig cfg;
  std::string provider;  // "dual" or "fd"
  std::uint64_t seed{0};
  std::vector<InvariantResult> results;
  bool all_pass{false};
};

struct SuiteOptions {
  std::size_t probe_count{1000};
  int threads{0};               // 0 selects default_threads()
  GridSpec quad_grid{32, 32, 32};
  int quad_nxi{32};
  Tolerances tol{};
};

// Runs the full ordered suite on a built solution (or custom state).
SuiteReport run_suite(const Solution& sol, const SuiteOptions& opt = {});
inline SuiteReport run_suite(const SolutionConfig& cfg, const SuiteOptions& opt = {}) {
  return run_suite(build_solution(cfg), opt);
}

void render_text(std::ostream& os, const SuiteReport& rep);
void render_machine(std::ostream& os, const SuiteReport& rep);

}  // namespace phlo
