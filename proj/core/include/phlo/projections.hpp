#pragma once

#include "phlo/fields4.hpp"

// The two complementary projector pairs attached to a field state (u, p),
// their duals on the cotangent side, and the constant helpers V0 (projector
// onto the x-y block) and J (quarter-turn in the x-y block).

namespace phlo {

struct ProjectionSet {
  Tensor11Field v, h;            // vertical / horizontal
  Tensor11Field v_star, h_star;  // cotangent duals (transposes)
  Tensor11Field vt, ht;          // companion pair
  Tensor11Field vt_star, ht_star;
  Tensor11Field v0, j;           // constants
};

ProjectionSet build_projections(const ScalarField& u, const ScalarField& p, double eps);

// Action of a cotangent projector (stored as the transpose matrix) on a form:
// degree 1 is the matrix acting on the component column, degree 2 is
// w(P e_mu, P e_nu) with P the tangent-side matrix.
PFormField apply_cotangent(const Tensor11Field& star, const PFormField& w);

}  // namespace phlo
