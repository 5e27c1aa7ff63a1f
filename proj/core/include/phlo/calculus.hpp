#pragma once

#include "phlo/fields4.hpp"

// Differential operators on field-level objects. Derivatives are routed
// through a DerivProvider so exact dual jets and finite differences stay
// interchangeable and cross-checkable.

namespace phlo {

// d f, and d on general p-forms: (d w)_{j0..jp} = sum_k (-1)^k d_{jk} w_{rest}.
PFormField exterior_derivative(const ScalarField& f, const DerivProvider& prov);
PFormField exterior_derivative(const PFormField& w, const DerivProvider& prov);

// Codifferential *d* (literal composition, no degree-dependent sign).
PFormField star_d_star(const PFormField& w, const DerivProvider& prov);

// X(f) = X^nu d_nu f.
ScalarField directional(const VectorField4& x, const ScalarField& f, const DerivProvider& prov);

// [X, Y]^mu = X^nu d_nu Y^mu - Y^nu d_nu X^mu.
VectorField4 lie_bracket(const VectorField4& x, const VectorField4& y, const DerivProvider& prov);

// Cartan formula: L_X w = i(X) dw + d(i(X) w).
PFormField lie_derivative(const VectorField4& x, const PFormField& w, const DerivProvider& prov);

// (L_X T)_mu^nu = X^s d_s T_mu^nu - T_mu^s d_s X^nu + T_s^nu d_mu X^s.
Tensor11Field lie_derivative(const VectorField4& x, const Tensor11Field& t, const DerivProvider& prov);

}  // namespace phlo
