#include "skewgeom/expr.hpp"

#include "skewgeom/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace skewgeom {

struct Expr::Node {
  ExprKind kind = ExprKind::Constant;
  double constant = 0.0;
  int index = 0;     // Variable
  int exponent = 0;  // Pow
  std::vector<Expr> children;
};

Expr::Expr() : Expr(constant(0.0)) {}

Expr::Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

Expr Expr::constant(double c) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Constant;
  n->constant = c;
  return Expr(std::move(n));
}

Expr Expr::variable(int index) {
  if (index < 1 || index > 4)
    throw Error("variable index " + std::to_string(index) + " outside 1..4");
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Variable;
  n->index = index;
  return Expr(std::move(n));
}

Expr Expr::unary(ExprKind kind, Expr arg) {
  switch (kind) {
    case ExprKind::Neg:
    case ExprKind::Exp:
    case ExprKind::Log:
    case ExprKind::Sin:
    case ExprKind::Cos:
    case ExprKind::Sqrt:
      break;
    default:
      throw Error("not a unary expression kind");
  }
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children.push_back(std::move(arg));
  return Expr(std::move(n));
}

Expr Expr::binary(ExprKind kind, Expr lhs, Expr rhs) {
  switch (kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div:
      break;
    default:
      throw Error("not a binary expression kind");
  }
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children.push_back(std::move(lhs));
  n->children.push_back(std::move(rhs));
  return Expr(std::move(n));
}

Expr Expr::power(Expr base, int exponent) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Pow;
  n->exponent = exponent;
  n->children.push_back(std::move(base));
  return Expr(std::move(n));
}

ExprKind Expr::kind() const { return node_->kind; }
double Expr::constant_value() const { return node_->constant; }
int Expr::variable_index() const { return node_->index; }
int Expr::exponent() const { return node_->exponent; }
const std::vector<Expr>& Expr::children() const { return node_->children; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ExprKind::Constant:
      return a.constant_value() == b.constant_value();
    case ExprKind::Variable:
      return a.variable_index() == b.variable_index();
    case ExprKind::Pow:
      if (a.exponent() != b.exponent()) return false;
      break;
    default:
      break;
  }
  const auto& ca = a.children();
  const auto& cb = b.children();
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i] != cb[i]) return false;
  return true;
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(ExprKind::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(ExprKind::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(ExprKind::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(ExprKind::Div, a, b); }
Expr operator-(const Expr& a) { return Expr::unary(ExprKind::Neg, a); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

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

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = Expr::binary(ExprKind::Add, lhs, term());
      else if (accept('-'))
        lhs = Expr::binary(ExprKind::Sub, lhs, term());
      else
        return lhs;
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      if (accept('*'))
        lhs = Expr::binary(ExprKind::Mul, lhs, factor());
      else if (accept('/'))
        lhs = Expr::binary(ExprKind::Div, lhs, factor());
      else
        return lhs;
    }
  }

  Expr factor() {
    if (accept('-')) return Expr::unary(ExprKind::Neg, power());
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("pow exponent must be an integer literal");
    }
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E')) {
      pos_ = start;
      fail("pow with non-integer exponent");
    }
    int n = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, n);
    if (ec != std::errc() || ptr != s_.data() + pos_) {
      pos_ = start;
      fail("pow exponent out of range");
    }
    return Expr::power(base, n);
  }

  Expr atom() {
    skip();
    if (pos_ >= s_.size()) fail("expected an operand but input ended");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (accept('(')) {
      Expr e = expr();
      expect(')');
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return pos_ - from;
    };
    std::size_t n = digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      const std::size_t mark = pos_;
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      if (digits() == 0) {
        pos_ = mark;
        fail("malformed number exponent");
      }
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc() || ptr != s_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return Expr::constant(v);
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    const std::string_view word = s_.substr(start, pos_ - start);
    if (word.size() == 2 && word[0] == 'x' && word[1] >= '1' && word[1] <= '4')
      return Expr::variable(word[1] - '0');

    ExprKind kind;
    if (word == "exp")
      kind = ExprKind::Exp;
    else if (word == "log")
      kind = ExprKind::Log;
    else if (word == "sin")
      kind = ExprKind::Sin;
    else if (word == "cos")
      kind = ExprKind::Cos;
    else if (word == "sqrt")
      kind = ExprKind::Sqrt;
    else {
      pos_ = start;
      fail("unknown identifier \"" + std::string(word) + "\"");
    }
    expect('(');
    Expr arg = expr();
    expect(')');
    return Expr::unary(kind, arg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

const char* function_name(ExprKind k) {
  switch (k) {
    case ExprKind::Exp:
      return "exp";
    case ExprKind::Log:
      return "log";
    case ExprKind::Sin:
      return "sin";
    case ExprKind::Cos:
      return "cos";
    case ExprKind::Sqrt:
      return "sqrt";
    default:
      return "?";
  }
}

void print(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case ExprKind::Constant: {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.constant_value());
      (void)ec;
      out.append(buf, ptr);
      return;
    }
    case ExprKind::Variable:
      out += 'x';
      out += char('0' + e.variable_index());
      return;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div: {
      static constexpr const char* ops[] = {" + ", " - ", " * ", " / "};
      out += '(';
      print(e.children()[0], out);
      out += ops[int(e.kind()) - int(ExprKind::Add)];
      print(e.children()[1], out);
      out += ')';
      return;
    }
    case ExprKind::Neg:
      out += "-(";
      print(e.children()[0], out);
      out += ')';
      return;
    case ExprKind::Pow:
      out += '(';
      print(e.children()[0], out);
      out += ")^";
      out += std::to_string(e.exponent());
      return;
    default:
      out += function_name(e.kind());
      out += '(';
      print(e.children()[0], out);
      out += ')';
      return;
  }
}

Jet2 jet(const Expr& e, const ChartPoint& p) {
  auto check = [&](const Jet2& j) {
    if (!std::isfinite(j.value) || !j.grad.allFinite() || !j.hess.allFinite())
      throw DomainError("non-finite value", to_string(e));
    return j;
  };
  switch (e.kind()) {
    case ExprKind::Constant:
      return Jet2::constant(e.constant_value());
    case ExprKind::Variable:
      return Jet2::coordinate(e.variable_index() - 1, p.x[e.variable_index() - 1]);
    case ExprKind::Add:
      return check(jet(e.children()[0], p) + jet(e.children()[1], p));
    case ExprKind::Sub:
      return check(jet(e.children()[0], p) - jet(e.children()[1], p));
    case ExprKind::Mul:
      return check(jet(e.children()[0], p) * jet(e.children()[1], p));
    case ExprKind::Div: {
      const Jet2 num = jet(e.children()[0], p);
      const Jet2 den = jet(e.children()[1], p);
      if (den.value == 0.0) throw DomainError("division by zero", to_string(e));
      return check(num / den);
    }
    case ExprKind::Neg:
      return -jet(e.children()[0], p);
    case ExprKind::Pow: {
      const Jet2 base = jet(e.children()[0], p);
      if (e.exponent() < 0 && base.value == 0.0)
        throw DomainError("division by zero", to_string(e));
      return check(pow(base, e.exponent()));
    }
    case ExprKind::Exp:
      return check(exp(jet(e.children()[0], p)));
    case ExprKind::Log: {
      const Jet2 u = jet(e.children()[0], p);
      if (!(u.value > 0.0)) throw DomainError("log of non-positive value", to_string(e));
      return check(log(u));
    }
    case ExprKind::Sin:
      return check(sin(jet(e.children()[0], p)));
    case ExprKind::Cos:
      return check(cos(jet(e.children()[0], p)));
    case ExprKind::Sqrt: {
      const Jet2 u = jet(e.children()[0], p);
      if (!(u.value > 0.0)) throw DomainError("sqrt of non-positive value", to_string(e));
      return check(sqrt(u));
    }
  }
  throw Error("corrupt expression node");
}

}  // namespace

Expr parse(std::string_view source) { return Parser(source).run(); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

Jet2 eval_jet2(const Expr& e, const ChartPoint& p) { return jet(e, p); }

double eval(const Expr& e, const ChartPoint& p) { return jet(e, p).value; }

}  // namespace skewgeom
