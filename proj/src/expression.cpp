#include "histo/expression.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

#include "histo/errors.hpp"

namespace histo {

struct Expression::Node {
  enum class Op { number, var_x, var_y, neg, add, sub, mul, div, pow, call };
  Op op = Op::number;
  double value = 0.0;
  double (*fn)(double) = nullptr;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;

  double eval(double x, double y) const {
    switch (op) {
      case Op::number:
        return value;
      case Op::var_x:
        return x;
      case Op::var_y:
        return y;
      case Op::neg:
        return -lhs->eval(x, y);
      case Op::add:
        return lhs->eval(x, y) + rhs->eval(x, y);
      case Op::sub:
        return lhs->eval(x, y) - rhs->eval(x, y);
      case Op::mul:
        return lhs->eval(x, y) * rhs->eval(x, y);
      case Op::div:
        return lhs->eval(x, y) / rhs->eval(x, y);
      case Op::pow:
        return std::pow(lhs->eval(x, y), rhs->eval(x, y));
      case Op::call:
        return fn(lhs->eval(x, y));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Expression::Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

struct Function {
  std::string_view name;
  double (*fn)(double);
};

double f_sin(double v) { return std::sin(v); }
double f_cos(double v) { return std::cos(v); }
double f_tan(double v) { return std::tan(v); }
double f_exp(double v) { return std::exp(v); }
double f_log(double v) { return std::log(v); }
double f_sqrt(double v) { return std::sqrt(v); }
double f_abs(double v) { return std::abs(v); }
double f_tanh(double v) { return std::tanh(v); }
double f_atan(double v) { return std::atan(v); }

constexpr Function kFunctions[] = {{"sin", f_sin},   {"cos", f_cos},   {"tan", f_tan},
                                   {"exp", f_exp},   {"log", f_log},   {"sqrt", f_sqrt},
                                   {"abs", f_abs},   {"tanh", f_tanh}, {"atan", f_atan}};

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("column " + std::to_string(pos_ + 1) + ": " + msg, 1);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr n = term();
    for (;;) {
      if (accept('+')) {
        n = make(Op::add, n, term());
      } else if (accept('-')) {
        n = make(Op::sub, n, term());
      } else {
        return n;
      }
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    for (;;) {
      if (accept('*')) {
        n = make(Op::mul, n, unary());
      } else if (accept('/')) {
        n = make(Op::div, n, unary());
      } else {
        return n;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Op::pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      NodePtr n = expr();
      if (!accept(')')) fail("expected ')'");
      return n;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double v = 0.0;
      auto res = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
      if (res.ec != std::errc()) fail("bad number");
      pos_ = static_cast<std::size_t>(res.ptr - s_.data());
      auto n = std::make_shared<Expression::Node>();
      n->value = v;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view id = s_.substr(start, pos_ - start);
      if (id == "x") return make(Op::var_x);
      if (id == "y") return make(Op::var_y);
      if (id == "pi" || id == "e") {
        auto n = std::make_shared<Expression::Node>();
        n->value = id == "pi" ? std::numbers::pi : std::numbers::e;
        return n;
      }
      for (const auto& f : kFunctions) {
        if (f.name == id) {
          if (!accept('(')) fail("expected '(' after " + std::string(id));
          NodePtr arg = expr();
          if (!accept(')')) fail("expected ')'");
          auto n = std::make_shared<Expression::Node>();
          n->op = Op::call;
          n->fn = f.fn;
          n->lhs = std::move(arg);
          return n;
        }
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(id) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.text_ = std::string(text);
  e.root_ = Parser(e.text_).parse();
  return e;
}

double Expression::operator()(double x, double y) const { return root_->eval(x, y); }

}  // namespace histo
