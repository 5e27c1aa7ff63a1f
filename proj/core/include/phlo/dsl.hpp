#pragma once

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "phlo/multidual.hpp"

// Scalar-field expression language over (x, y, z, xi).
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := primary ('^' factor)?          right-associative,
//                                            binds tighter than unary minus
//   primary:= number | identifier | identifier '(' expr (',' expr)* ')'
//           | '(' expr ')'
//
// Functions: sin, cos, exp, sqrt, bump (1 arg), atan2 (2 args).
// Named values: pi plus whatever the caller binds (eps, kappa, l0, lambda).
// '^' requires a constant exponent; non-integer exponents need a positive base.

namespace phlo::dsl {

struct ParseError : std::runtime_error {
  std::size_t offset;
  std::string expected;
  std::string found;
  ParseError(std::size_t off, std::string exp, std::string got);
};

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

enum class NodeKind { Number, Variable, Symbol, Neg, Add, Sub, Mul, Div, Pow, Call };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind{};
  double number{0.0};       // Number
  int axis{-1};             // Variable: 0..3 for x,y,z,xi
  std::string name;         // Symbol or Call
  std::vector<NodePtr> args;
  std::size_t offset{0};    // byte offset into the source text
};

// Syntax only; identifier resolution happens in validate().
NodePtr parse(std::string_view src);

using Bindings = std::map<std::string, double>;

// pi plus the model parameters; lambda = 4*l0.
Bindings standard_bindings(double eps, double kappa, double l0);

// Rejects unknown identifiers, wrong arities and non-constant exponents,
// reporting the offending byte offset.
void validate(const NodePtr& root, const Bindings& bound);

// Fully parenthesized form that reparses to an equivalent tree.
std::string pretty(const Node& n);
inline std::string pretty(const NodePtr& root) { return pretty(*root); }

namespace detail {
bool contains_variable(const Node& n);
}

template <class S>
S eval(const Node& n, const std::array<S, 4>& vars, const Bindings& bound) {
  switch (n.kind) {
    case NodeKind::Number: return S(n.number);
    case NodeKind::Variable: return vars[n.axis];
    case NodeKind::Symbol: {
      auto it = bound.find(n.name);
      if (it == bound.end()) throw EvalError("unbound symbol: " + n.name);
      return S(it->second);
    }
    case NodeKind::Neg: return -eval<S>(*n.args[0], vars, bound);
    case NodeKind::Add: return eval<S>(*n.args[0], vars, bound) + eval<S>(*n.args[1], vars, bound);
    case NodeKind::Sub: return eval<S>(*n.args[0], vars, bound) - eval<S>(*n.args[1], vars, bound);
    case NodeKind::Mul: return eval<S>(*n.args[0], vars, bound) * eval<S>(*n.args[1], vars, bound);
    case NodeKind::Div: {
      S num = eval<S>(*n.args[0], vars, bound);
      S den = eval<S>(*n.args[1], vars, bound);
      if (leading(den) == 0.0) throw EvalError("division by zero in " + pretty(n));
      return num / den;
    }
    case NodeKind::Pow: {
      S base = eval<S>(*n.args[0], vars, bound);
      std::array<double, 4> no_vars{};
      double e = eval<double>(*n.args[1], no_vars, bound);
      if (e == static_cast<double>(static_cast<long long>(e)))
        return powi(base, static_cast<long long>(e));
      if (!(leading(base) > 0.0))
        throw EvalError("non-integer exponent needs positive base in " + pretty(n));
      return pow(base, e);
    }
    case NodeKind::Call: {
      S a0 = eval<S>(*n.args[0], vars, bound);
      if (n.name == "sin") return sin(a0);
      if (n.name == "cos") return cos(a0);
      if (n.name == "exp") return exp(a0);
      if (n.name == "bump") return bump(a0);
      if (n.name == "sqrt") {
        if (leading(a0) < 0.0) throw EvalError("sqrt of negative value in " + pretty(n));
        return sqrt(a0);
      }
      // atan2
      S a1 = eval<S>(*n.args[1], vars, bound);
      if (leading(a0) == 0.0 && leading(a1) == 0.0) throw EvalError("atan2(0,0) in " + pretty(n));
      return atan2(a0, a1);
    }
  }
  throw EvalError("corrupt expression node");
}

}  // namespace phlo::dsl
