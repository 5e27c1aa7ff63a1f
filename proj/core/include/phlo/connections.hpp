#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "phlo/calculus.hpp"
#include "phlo/projections.hpp"

// Nonlinear-connection machinery: Nijenhuis torsion of a projector, curvature
// of the horizontal distribution, the derived length scale, and Frobenius
// integrability analysis for explicit distributions.

namespace phlo {

// Vector-valued 2-form sampled on coordinate pairs (slot order of kPairs).
struct VectorValued2Form {
  std::array<VectorField4, 6> pair_comp;

  // Value on arbitrary vectors by bilinear antisymmetric extension.
  Vec4 value(const Point4& pt, const Vec4& x, const Vec4& y) const;
};

// Nijenhuis torsion of an idempotent P on coordinate pairs:
// N(X,Y) = [PX,PY] + P[X,Y] - P[X,PY] - P[PX,Y].
VectorValued2Form nijenhuis(const Tensor11Field& p, const DerivProvider& prov);

// Curvature of the distribution kept by `keep` measured through `project`:
// R(X,Y) = project([keep X, keep Y]).
VectorValued2Form distribution_curvature(const Tensor11Field& project,
                                         const Tensor11Field& keep,
                                         const DerivProvider& prov);

// Closed-form curvature data of the (u, p) connection pair.
struct ConnectionCurvature {
  ScalarField a, b;      // X(u), X(p) with X = -eps d_z + d_xi
  VectorField4 z1, z2;   // R(d_z, d_xi) and companion
  ScalarField ksq;       // a^2 + b^2, squared curvature scale
};
ConnectionCurvature connection_curvature(const ScalarField& u, const ScalarField& p,
                                         double eps, const DerivProvider& prov);

// l0^2 = (u^2 + p^2) / ksq where the denominator is nonzero.
ScalarField l0_squared_field(const ScalarField& phi_sq, const ScalarField& ksq);

struct L0Summary {
  std::size_t defined_count{0};
  std::size_t undefined_count{0};
  double min{0.0};
  double max{0.0};
  double mean{0.0};
  std::string note;
};
// Samples l0 over probes, masking points where ksq <= floor.
L0Summary l0_summary(const ScalarField& phi_sq, const ScalarField& ksq,
                     const std::vector<Point4>& probes, double floor = 1e-30);

// One-parameter mixing of a state with its companion:
// u' = a u + eps b p, p' = eps b u - a p. Solutions map to solutions for any
// (a, b); amplitude scales by a^2 + b^2.
std::pair<ScalarField, ScalarField> dual_mix(const ScalarField& u, const ScalarField& p,
                                             double eps, double a, double b);

struct Distribution {
  std::vector<VectorField4> generators;
};

struct FrobeniusPair {
  int gi{0}, gj{0};
  Point4 worst_probe{};
  Vec4 bracket{};
  Vec4 tangential{};  // least-squares span component at the worst probe
  Vec4 residual{};
  double max_residual_norm{0.0};
};

struct FrobeniusReport {
  bool integrable{false};
  double max_residual{0.0};
  double tol{0.0};
  std::size_t probe_count{0};
  std::vector<FrobeniusPair> pairs;
};

// Checks involutivity of span(generators) at probes. Residuals come from a
// Euclidean least-squares fit of each bracket to the generator span; throws
// if the generators lose rank at any probe.
FrobeniusReport frobenius(const Distribution& d, const std::vector<Point4>& probes,
                          double tol, const DerivProvider& prov);

// Curvature of a distribution described by an annihilating coframe alpha^m
// and complementary frame Y_m with alpha^m(Y_n) = delta:
// Omega(X, Y) = -sum_m dalpha^m(X, Y) Y_m for X, Y tangent to the distribution.
struct CoframeCurvature {
  std::vector<PFormField> dalpha;
  std::vector<VectorField4> frame;

  Vec4 value(const Point4& pt, const Vec4& x, const Vec4& y) const;
};
CoframeCurvature coframe_curvature(const std::vector<PFormField>& alpha,
                                   const std::vector<VectorField4>& frame,
                                   const DerivProvider& prov);

// max_mn max_probe |alpha^m(Y_n) - delta_mn|, a duality sanity check.
double coframe_duality_residual(const std::vector<PFormField>& alpha,
                                const std::vector<VectorField4>& frame,
                                const std::vector<Point4>& probes);

}  // namespace phlo
