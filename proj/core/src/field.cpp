#include "phlo/field.hpp"

#include <cmath>

namespace phlo {

namespace {

class ConstantNode final : public FieldExpr {
 public:
  explicit ConstantNode(double c) : c_(c) {}
  double eval0(const Point4&) const override { return c_; }
  D1 eval1(const Point4&) const override { return D1(c_); }
  D2 eval2(const Point4&) const override { return D2(c_); }
  const double* as_constant() const override { return &c_; }

 private:
  double c_;
};

class CoordinateNode final : public FieldExprT<CoordinateNode> {
 public:
  explicit CoordinateNode(int axis) : axis_(axis) {}
  template <class S>
  S evalT(const Point4& p) const {
    return seed_coordinate<S>(p[axis_], axis_);
  }

 private:
  int axis_;
};

enum class BinOp { Add, Sub, Mul, Div };

class BinaryNode final : public FieldExprT<BinaryNode> {
 public:
  BinaryNode(BinOp op, std::shared_ptr<const FieldExpr> a, std::shared_ptr<const FieldExpr> b)
      : op_(op), a_(std::move(a)), b_(std::move(b)) {}
  template <class S>
  S evalT(const Point4& p) const {
    S a = eval_as<S>(*a_, p);
    S b = eval_as<S>(*b_, p);
    switch (op_) {
      case BinOp::Add: return a + b;
      case BinOp::Sub: return a - b;
      case BinOp::Mul: return a * b;
      case BinOp::Div: return a / b;
    }
    return S(0.0);
  }

 private:
  BinOp op_;
  std::shared_ptr<const FieldExpr> a_, b_;
};

class NegNode final : public FieldExprT<NegNode> {
 public:
  explicit NegNode(std::shared_ptr<const FieldExpr> a) : a_(std::move(a)) {}
  template <class S>
  S evalT(const Point4& p) const {
    return -eval_as<S>(*a_, p);
  }

 private:
  std::shared_ptr<const FieldExpr> a_;
};

enum class Fn1 { Sqrt, Sin, Cos, Bump, BumpSq };

class Func1Node final : public FieldExprT<Func1Node> {
 public:
  Func1Node(Fn1 fn, std::shared_ptr<const FieldExpr> a) : fn_(fn), a_(std::move(a)) {}
  template <class S>
  S evalT(const Point4& p) const {
    using std::cos;
    using std::sin;
    using std::sqrt;
    S a = eval_as<S>(*a_, p);
    switch (fn_) {
      case Fn1::Sqrt: return sqrt(a);
      case Fn1::Sin: return sin(a);
      case Fn1::Cos: return cos(a);
      case Fn1::Bump: return bump(a);
      case Fn1::BumpSq: return bump_sq(a);
    }
    return S(0.0);
  }

 private:
  Fn1 fn_;
  std::shared_ptr<const FieldExpr> a_;
};

class Atan2Node final : public FieldExprT<Atan2Node> {
 public:
  Atan2Node(std::shared_ptr<const FieldExpr> y, std::shared_ptr<const FieldExpr> x)
      : y_(std::move(y)), x_(std::move(x)) {}
  template <class S>
  S evalT(const Point4& p) const {
    using std::atan2;
    return atan2(eval_as<S>(*y_, p), eval_as<S>(*x_, p));
  }

 private:
  std::shared_ptr<const FieldExpr> y_, x_;
};

class DslNode final : public FieldExprT<DslNode> {
 public:
  DslNode(dsl::NodePtr ast, dsl::Bindings bindings)
      : ast_(std::move(ast)), bindings_(std::move(bindings)) {}
  template <class S>
  S evalT(const Point4& p) const {
    return dsl::eval<S>(*ast_, seed_point<S>(p), bindings_);
  }

 private:
  dsl::NodePtr ast_;
  dsl::Bindings bindings_;
};

class DualDerivNode final : public FieldExpr {
 public:
  DualDerivNode(std::shared_ptr<const FieldExpr> f, int axis, double h)
      : f_(std::move(f)), axis_(axis), h_(h) {}

  double eval0(const Point4& p) const override { return f_->eval1(p).d[axis_]; }

  D1 eval1(const Point4& p) const override {
    D2 r = f_->eval2(p);
    D1 out;
    out.v = r.v.d[axis_];
    for (int j = 0; j < kDim; ++j) out.d[j] = r.d[j].d[axis_];
    return out;
  }

  // Third-order jets are not carried by the dual stack; close the last layer
  // with a central difference of the exact second-order jet.
  D2 eval2(const Point4& p) const override {
    D2 out;
    out.v = eval1(p);
    for (int j = 0; j < kDim; ++j) {
      D1 hi = eval1(shifted(p, j, h_));
      D1 lo = eval1(shifted(p, j, -h_));
      out.d[j] = (hi - lo) / (2.0 * h_);
    }
    return out;
  }

 private:
  std::shared_ptr<const FieldExpr> f_;
  int axis_;
  double h_;
};

// Derivative along a constant direction from one jet evaluation; cheaper than
// summing per-axis derivative nodes when several components are nonzero.
class DualDirNode final : public FieldExpr {
 public:
  DualDirNode(std::shared_ptr<const FieldExpr> f, std::array<double, 4> c, double h)
      : f_(std::move(f)), c_(c), h_(h) {}

  double eval0(const Point4& p) const override {
    D1 r = f_->eval1(p);
    double s = 0.0;
    for (int i = 0; i < kDim; ++i)
      if (c_[i] != 0.0) s += c_[i] * r.d[i];
    return s;
  }

  D1 eval1(const Point4& p) const override {
    D2 r = f_->eval2(p);
    D1 out;
    double v = 0.0;
    for (int i = 0; i < kDim; ++i)
      if (c_[i] != 0.0) v += c_[i] * r.v.d[i];
    out.v = v;
    for (int j = 0; j < kDim; ++j) {
      double s = 0.0;
      for (int i = 0; i < kDim; ++i)
        if (c_[i] != 0.0) s += c_[i] * r.d[j].d[i];
      out.d[j] = s;
    }
    return out;
  }

  D2 eval2(const Point4& p) const override {
    D2 out;
    out.v = eval1(p);
    for (int j = 0; j < kDim; ++j) {
      D1 hi = eval1(shifted(p, j, h_));
      D1 lo = eval1(shifted(p, j, -h_));
      out.d[j] = (hi - lo) / (2.0 * h_);
    }
    return out;
  }

 private:
  std::shared_ptr<const FieldExpr> f_;
  std::array<double, 4> c_;
  double h_;
};

class FdDerivNode final : public FieldExpr {
 public:
  FdDerivNode(std::shared_ptr<const FieldExpr> f, int axis, double h)
      : f_(std::move(f)), axis_(axis), h_(h) {}

  double eval0(const Point4& p) const override {
    return (f_->eval0(shifted(p, axis_, h_)) - f_->eval0(shifted(p, axis_, -h_))) / (2.0 * h_);
  }
  D1 eval1(const Point4& p) const override {
    return (f_->eval1(shifted(p, axis_, h_)) - f_->eval1(shifted(p, axis_, -h_))) / (2.0 * h_);
  }
  D2 eval2(const Point4& p) const override {
    return (f_->eval2(shifted(p, axis_, h_)) - f_->eval2(shifted(p, axis_, -h_))) / (2.0 * h_);
  }

 private:
  std::shared_ptr<const FieldExpr> f_;
  int axis_;
  double h_;
};

std::shared_ptr<const FieldExpr> make_const(double c) {
  return std::make_shared<ConstantNode>(c);
}

}  // namespace

ScalarField::ScalarField() : node_(make_const(0.0)) {}
ScalarField::ScalarField(double c) : node_(make_const(c)) {}

ScalarField constant(double c) { return ScalarField(c); }

ScalarField coordinate(int axis) {
  return ScalarField(std::make_shared<CoordinateNode>(axis));
}

// The operators fold constants and drop zero branches so that derived graphs
// (wedges, contractions, Lie brackets) stay small.
ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  if (a.is_constant() && b.is_constant()) return constant(a.constant_value() + b.constant_value());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return ScalarField(std::make_shared<BinaryNode>(BinOp::Add, a.share(), b.share()));
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  if (a.is_constant() && b.is_constant()) return constant(a.constant_value() - b.constant_value());
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return ScalarField(std::make_shared<BinaryNode>(BinOp::Sub, a.share(), b.share()));
}

ScalarField operator-(const ScalarField& a) {
  if (a.is_constant()) return constant(-a.constant_value());
  return ScalarField(std::make_shared<NegNode>(a.share()));
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  if (a.is_constant() && b.is_constant()) return constant(a.constant_value() * b.constant_value());
  if (a.is_zero() || b.is_zero()) return constant(0.0);
  if (a.is_constant() && a.constant_value() == 1.0) return b;
  if (b.is_constant() && b.constant_value() == 1.0) return a;
  if (a.is_constant() && a.constant_value() == -1.0) return -b;
  if (b.is_constant() && b.constant_value() == -1.0) return -a;
  return ScalarField(std::make_shared<BinaryNode>(BinOp::Mul, a.share(), b.share()));
}

ScalarField operator/(const ScalarField& a, const ScalarField& b) {
  if (b.is_constant() && b.constant_value() == 1.0) return a;
  if (a.is_zero() && !b.is_zero()) return constant(0.0);
  return ScalarField(std::make_shared<BinaryNode>(BinOp::Div, a.share(), b.share()));
}

ScalarField sqrt_field(const ScalarField& a) {
  return ScalarField(std::make_shared<Func1Node>(Fn1::Sqrt, a.share()));
}
ScalarField sin_field(const ScalarField& a) {
  return ScalarField(std::make_shared<Func1Node>(Fn1::Sin, a.share()));
}
ScalarField cos_field(const ScalarField& a) {
  return ScalarField(std::make_shared<Func1Node>(Fn1::Cos, a.share()));
}
ScalarField atan2_field(const ScalarField& y, const ScalarField& x) {
  return ScalarField(std::make_shared<Atan2Node>(y.share(), x.share()));
}
ScalarField bump_field(const ScalarField& a) {
  return ScalarField(std::make_shared<Func1Node>(Fn1::Bump, a.share()));
}
ScalarField bump_sq_field(const ScalarField& a) {
  return ScalarField(std::make_shared<Func1Node>(Fn1::BumpSq, a.share()));
}

ScalarField dsl_field(dsl::NodePtr ast, dsl::Bindings bindings) {
  return ScalarField(std::make_shared<DslNode>(std::move(ast), std::move(bindings)));
}

ScalarField derivative(const ScalarField& f, int axis, const DerivProvider& provider) {
  if (f.is_constant()) return constant(0.0);
  if (provider.mode == DerivProvider::Mode::Dual) {
    return ScalarField(std::make_shared<DualDerivNode>(f.share(), axis, provider.h));
  }
  return ScalarField(std::make_shared<FdDerivNode>(f.share(), axis, provider.h));
}

ScalarField directional_constant(const ScalarField& f, const std::array<double, 4>& dir,
                                 const DerivProvider& provider) {
  bool all_zero = true;
  for (double c : dir) all_zero = all_zero && c == 0.0;
  if (f.is_constant() || all_zero) return constant(0.0);
  if (provider.mode == DerivProvider::Mode::Dual)
    return ScalarField(std::make_shared<DualDirNode>(f.share(), dir, provider.h));
  ScalarField s = constant(0.0);
  for (int i = 0; i < kDim; ++i)
    if (dir[i] != 0.0) s = s + constant(dir[i]) * derivative(f, i, provider);
  return s;
}

}  // namespace phlo
