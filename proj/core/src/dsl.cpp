#include "phlo/dsl.hpp"

#include <cctype>
#include <cstdio>
#include <numbers>

namespace phlo::dsl {

namespace {

std::string describe(std::size_t offset, const std::string& expected, const std::string& found) {
  return "parse error at offset " + std::to_string(offset) + ": expected " + expected +
         ", found " + (found.empty() ? std::string("end of input") : "'" + found + "'");
}

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End } kind;
  std::size_t offset;
  std::string text;
  double value{0.0};
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_.offset = pos_;
    if (pos_ >= src_.size()) {
      tok_.kind = Token::End;
      tok_.text.clear();
      return;
    }
    char c = src_[pos_];
    switch (c) {
      case '+': single(Token::Plus); return;
      case '-': single(Token::Minus); return;
      case '*': single(Token::Star); return;
      case '/': single(Token::Slash); return;
      case '^': single(Token::Caret); return;
      case '(': single(Token::LParen); return;
      case ')': single(Token::RParen); return;
      case ',': single(Token::Comma); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Ident;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    throw ParseError(pos_, "a token", std::string(1, c));
  }

  void single(Token::Kind k) {
    tok_.kind = k;
    tok_.text = std::string(1, src_[pos_]);
    ++pos_;
  }

  void lex_number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // 'e' belongs to a following identifier, not this literal
      }
    }
    tok_.kind = Token::Number;
    tok_.text = std::string(src_.substr(start, pos_ - start));
    tok_.value = std::strtod(tok_.text.c_str(), nullptr);
  }

  std::string_view src_;
  std::size_t pos_{0};
  Token tok_{};
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  NodePtr run() {
    NodePtr e = expr();
    const Token& t = lex_.peek();
    if (t.kind != Token::End) throw ParseError(t.offset, "end of input or an operator", t.text);
    return e;
  }

 private:
  NodePtr expr() {
    NodePtr lhs = term();
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      Token op = lex_.take();
      NodePtr rhs = term();
      lhs = binary(op.kind == Token::Plus ? NodeKind::Add : NodeKind::Sub, op.offset, lhs, rhs);
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (lex_.peek().kind == Token::Star || lex_.peek().kind == Token::Slash) {
      Token op = lex_.take();
      NodePtr rhs = factor();
      lhs = binary(op.kind == Token::Star ? NodeKind::Mul : NodeKind::Div, op.offset, lhs, rhs);
    }
    return lhs;
  }

  NodePtr factor() {
    if (lex_.peek().kind == Token::Minus) {
      Token op = lex_.take();
      NodePtr inner = factor();
      auto n = std::make_shared<Node>();
      n->kind = NodeKind::Neg;
      n->offset = op.offset;
      n->args.push_back(inner);
      return n;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (lex_.peek().kind == Token::Caret) {
      Token op = lex_.take();
      NodePtr e = factor();  // right-associative; allows 2^-3
      return binary(NodeKind::Pow, op.offset, base, e);
    }
    return base;
  }

  NodePtr primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Number: {
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::Number;
        n->number = t.value;
        n->offset = t.offset;
        return n;
      }
      case Token::Ident: {
        if (lex_.peek().kind == Token::LParen) {
          lex_.take();
          auto n = std::make_shared<Node>();
          n->kind = NodeKind::Call;
          n->name = t.text;
          n->offset = t.offset;
          n->args.push_back(expr());
          while (lex_.peek().kind == Token::Comma) {
            lex_.take();
            n->args.push_back(expr());
          }
          expect(Token::RParen, ")");
          return n;
        }
        auto n = std::make_shared<Node>();
        n->offset = t.offset;
        int axis = axis_of(t.text);
        if (axis >= 0) {
          n->kind = NodeKind::Variable;
          n->axis = axis;
        } else {
          n->kind = NodeKind::Symbol;
          n->name = t.text;
        }
        return n;
      }
      case Token::LParen: {
        NodePtr e = expr();
        expect(Token::RParen, ")");
        return e;
      }
      default:
        throw ParseError(t.offset, "a number, identifier or '('", t.text);
    }
  }

  static int axis_of(const std::string& s) {
    if (s == "x") return 0;
    if (s == "y") return 1;
    if (s == "z") return 2;
    if (s == "xi") return 3;
    return -1;
  }

  void expect(Token::Kind k, const std::string& what) {
    const Token& t = lex_.peek();
    if (t.kind != k) throw ParseError(t.offset, "'" + what + "'", t.text);
    lex_.take();
  }

  static NodePtr binary(NodeKind kind, std::size_t off, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->offset = off;
    n->args.push_back(std::move(a));
    n->args.push_back(std::move(b));
    return n;
  }

  Lexer lex_;
};

struct FuncSig {
  const char* name;
  int arity;
};
constexpr FuncSig kFuncs[] = {
    {"sin", 1}, {"cos", 1}, {"exp", 1}, {"sqrt", 1}, {"bump", 1}, {"atan2", 2}};

const FuncSig* find_func(const std::string& name) {
  for (const auto& f : kFuncs)
    if (name == f.name) return &f;
  return nullptr;
}

std::string fmt_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ParseError::ParseError(std::size_t off, std::string exp, std::string got)
    : std::runtime_error(describe(off, exp, got)),
      offset(off),
      expected(std::move(exp)),
      found(std::move(got)) {}

NodePtr parse(std::string_view src) { return Parser(src).run(); }

Bindings standard_bindings(double eps, double kappa, double l0) {
  return Bindings{{"pi", std::numbers::pi},
                  {"eps", eps},
                  {"kappa", kappa},
                  {"l0", l0},
                  {"lambda", 4.0 * l0}};
}

namespace detail {
bool contains_variable(const Node& n) {
  if (n.kind == NodeKind::Variable) return true;
  for (const auto& a : n.args)
    if (contains_variable(*a)) return true;
  return false;
}
}  // namespace detail

void validate(const NodePtr& root, const Bindings& bound) {
  const Node& n = *root;
  switch (n.kind) {
    case NodeKind::Symbol:
      if (!bound.count(n.name)) throw ParseError(n.offset, "a known identifier", n.name);
      return;
    case NodeKind::Call: {
      const FuncSig* f = find_func(n.name);
      if (!f) throw ParseError(n.offset, "a known function", n.name);
      if (static_cast<int>(n.args.size()) != f->arity)
        throw ParseError(n.offset,
                         std::string(f->name) + " with " + std::to_string(f->arity) + " argument(s)",
                         std::to_string(n.args.size()) + " argument(s)");
      break;
    }
    case NodeKind::Pow:
      if (detail::contains_variable(*n.args[1]))
        throw ParseError(n.args[1]->offset, "a constant exponent", "an expression in x,y,z,xi");
      break;
    default:
      break;
  }
  for (const auto& a : n.args) validate(a, bound);
}

std::string pretty(const Node& n) {
  switch (n.kind) {
    case NodeKind::Number: return fmt_number(n.number);
    case NodeKind::Variable: {
      static const char* names[4] = {"x", "y", "z", "xi"};
      return names[n.axis];
    }
    case NodeKind::Symbol: return n.name;
    case NodeKind::Neg: return "(-" + pretty(n.args[0]) + ")";
    case NodeKind::Add: return "(" + pretty(n.args[0]) + " + " + pretty(n.args[1]) + ")";
    case NodeKind::Sub: return "(" + pretty(n.args[0]) + " - " + pretty(n.args[1]) + ")";
    case NodeKind::Mul: return "(" + pretty(n.args[0]) + " * " + pretty(n.args[1]) + ")";
    case NodeKind::Div: return "(" + pretty(n.args[0]) + " / " + pretty(n.args[1]) + ")";
    case NodeKind::Pow: return "(" + pretty(n.args[0]) + "^" + pretty(n.args[1]) + ")";
    case NodeKind::Call: {
      std::string s = n.name + "(";
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i) s += ", ";
        s += pretty(n.args[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace phlo::dsl
