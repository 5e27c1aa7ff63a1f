#pragma once

#include <memory>
#include <utility>

#include "phlo/dsl.hpp"
#include "phlo/geometry.hpp"
#include "phlo/multidual.hpp"

// Scalar fields as immutable evaluation graphs. Every node evaluates at three
// scalar levels: plain double, first-order dual, second-order dual. The dual
// levels carry exact derivatives; a finite-difference provider is available as
// an independent cross-check.

namespace phlo {

struct DerivProvider {
  enum class Mode { Dual, FiniteDifference };
  Mode mode{Mode::Dual};
  double h{1e-5};

  static DerivProvider dual() { return {Mode::Dual, 1e-5}; }
  static DerivProvider finite_difference(double step = 1e-5) {
    return {Mode::FiniteDifference, step};
  }
};

class FieldExpr {
 public:
  virtual double eval0(const Point4&) const = 0;
  virtual D1 eval1(const Point4&) const = 0;
  virtual D2 eval2(const Point4&) const = 0;
  // Non-null for constant nodes; enables graph pruning.
  virtual const double* as_constant() const { return nullptr; }
  virtual ~FieldExpr() = default;
};

template <class Derived>
class FieldExprT : public FieldExpr {
 public:
  double eval0(const Point4& p) const final {
    return static_cast<const Derived*>(this)->template evalT<double>(p);
  }
  D1 eval1(const Point4& p) const final {
    return static_cast<const Derived*>(this)->template evalT<D1>(p);
  }
  D2 eval2(const Point4& p) const final {
    return static_cast<const Derived*>(this)->template evalT<D2>(p);
  }
};

template <class S>
S eval_as(const FieldExpr& f, const Point4& p);
template <>
inline double eval_as<double>(const FieldExpr& f, const Point4& p) { return f.eval0(p); }
template <>
inline D1 eval_as<D1>(const FieldExpr& f, const Point4& p) { return f.eval1(p); }
template <>
inline D2 eval_as<D2>(const FieldExpr& f, const Point4& p) { return f.eval2(p); }

template <class S>
std::array<S, 4> seed_point(const Point4& p) {
  return {seed_coordinate<S>(p[0], 0), seed_coordinate<S>(p[1], 1),
          seed_coordinate<S>(p[2], 2), seed_coordinate<S>(p[3], 3)};
}

class ScalarField {
 public:
  ScalarField();                    // zero field
  explicit ScalarField(double c);   // constant field
  explicit ScalarField(std::shared_ptr<const FieldExpr> node) : node_(std::move(node)) {}

  double operator()(const Point4& p) const { return node_->eval0(p); }
  D1 jet1(const Point4& p) const { return node_->eval1(p); }
  D2 jet2(const Point4& p) const { return node_->eval2(p); }

  const FieldExpr& node() const { return *node_; }
  std::shared_ptr<const FieldExpr> share() const { return node_; }

  bool is_constant() const { return node_->as_constant() != nullptr; }
  bool is_zero() const {
    const double* c = node_->as_constant();
    return c && *c == 0.0;
  }
  double constant_value() const { return *node_->as_constant(); }

 private:
  std::shared_ptr<const FieldExpr> node_;
};

ScalarField constant(double c);
ScalarField coordinate(int axis);

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator/(const ScalarField& a, const ScalarField& b);
inline ScalarField operator+(const ScalarField& a, double c) { return a + constant(c); }
inline ScalarField operator+(double c, const ScalarField& a) { return constant(c) + a; }
inline ScalarField operator-(const ScalarField& a, double c) { return a - constant(c); }
inline ScalarField operator-(double c, const ScalarField& a) { return constant(c) - a; }
inline ScalarField operator*(const ScalarField& a, double c) { return a * constant(c); }
inline ScalarField operator*(double c, const ScalarField& a) { return constant(c) * a; }
inline ScalarField operator/(const ScalarField& a, double c) { return a / constant(c); }

ScalarField sqrt_field(const ScalarField& a);
ScalarField sin_field(const ScalarField& a);
ScalarField cos_field(const ScalarField& a);
ScalarField atan2_field(const ScalarField& y, const ScalarField& x);
ScalarField bump_field(const ScalarField& a);     // exp(-1/(1-a^2)) inside |a|<1
ScalarField bump_sq_field(const ScalarField& a);  // same profile as a function of a = t^2

// Field bound to a parsed expression; the AST must already be validated.
ScalarField dsl_field(dsl::NodePtr ast, dsl::Bindings bindings);

// Partial derivative along `axis` through the chosen provider.
ScalarField derivative(const ScalarField& f, int axis, const DerivProvider& provider);

// Derivative along a constant direction; with the dual provider this costs a
// single jet evaluation regardless of how many components are nonzero.
ScalarField directional_constant(const ScalarField& f, const std::array<double, 4>& dir,
                                 const DerivProvider& provider);

// Generic adapter: F must provide template<class S> S operator()(const std::array<S,4>&) const.
template <class F>
class FunctorNode final : public FieldExprT<FunctorNode<F>> {
 public:
  explicit FunctorNode(F f) : f_(std::move(f)) {}
  template <class S>
  S evalT(const Point4& p) const {
    return f_(seed_point<S>(p));
  }

 private:
  F f_;
};

template <class F>
ScalarField functor_field(F f) {
  return ScalarField(std::make_shared<FunctorNode<F>>(std::move(f)));
}

inline Point4 shifted(Point4 p, int axis, double delta) {
  p[axis] += delta;
  return p;
}

}  // namespace phlo
