#include "harmlab/expr.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "harmlab/errors.hpp"

namespace harmlab {

namespace {

ExprPtr make_node(ExprNode node) { return std::make_shared<const ExprNode>(std::move(node)); }

bool is_const(const ExprPtr& e) { return e->kind == ExprKind::kConst; }

}  // namespace

ExprPtr expr_z() { return make_node({ExprKind::kZ}); }

ExprPtr expr_const(Cx value) {
  ExprNode n{ExprKind::kConst};
  n.value = value;
  return make_node(std::move(n));
}

// The binary/unary factories fold constant operands, so complex literals
// written as expressions (0.4+0.2*i) collapse into a single Const node.
ExprPtr expr_add(ExprPtr a, ExprPtr b) {
  if (is_const(a) && is_const(b)) return expr_const(a->value + b->value);
  ExprNode n{ExprKind::kAdd};
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make_node(std::move(n));
}

ExprPtr expr_sub(ExprPtr a, ExprPtr b) {
  if (is_const(a) && is_const(b)) return expr_const(a->value - b->value);
  ExprNode n{ExprKind::kSub};
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make_node(std::move(n));
}

ExprPtr expr_mul(ExprPtr a, ExprPtr b) {
  if (is_const(a) && is_const(b)) return expr_const(a->value * b->value);
  ExprNode n{ExprKind::kMul};
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make_node(std::move(n));
}

ExprPtr expr_div(ExprPtr a, ExprPtr b) {
  if (is_const(a) && is_const(b) && std::abs(b->value) > kEpsDiv)
    return expr_const(a->value / b->value);
  ExprNode n{ExprKind::kDiv};
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return make_node(std::move(n));
}

ExprPtr expr_neg(ExprPtr a) {
  if (is_const(a)) return expr_const(-a->value);
  ExprNode n{ExprKind::kNeg};
  n.lhs = std::move(a);
  return make_node(std::move(n));
}

ExprPtr expr_pow(ExprPtr base, int exponent) {
  ExprNode n{ExprKind::kPowInt};
  n.exponent = exponent;
  n.lhs = std::move(base);
  return make_node(std::move(n));
}

ExprPtr expr_exp(ExprPtr a) {
  ExprNode n{ExprKind::kExp};
  n.lhs = std::move(a);
  return make_node(std::move(n));
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr_rule();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    raise(Errc::parse_error, "at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected '") + c + "' (" + what + ")");
  }

  ExprPtr parse_expr_rule() {
    ExprPtr lhs = parse_term();
    for (;;) {
      if (consume('+')) {
        lhs = expr_add(lhs, parse_term());
      } else if (consume('-')) {
        lhs = expr_sub(lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    for (;;) {
      if (consume('*')) {
        lhs = expr_mul(lhs, parse_unary());
      } else if (consume('/')) {
        lhs = expr_div(lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_unary() {
    if (consume('-')) return expr_neg(parse_unary());
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    while (consume('^')) base = expr_pow(base, parse_int_exponent());
    return base;
  }

  int parse_int_exponent() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent after '^'");
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(negative ? -value : value);
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_expr_rule();
      expect(')', "to close group");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string word = text_.substr(start, pos_ - start);
      if (word == "z") return expr_z();
      if (word == "i") return expr_const(Cx(0.0, 1.0));
      if (word == "exp") {
        expect('(', "after exp");
        ExprPtr arg = parse_expr_rule();
        expect(')', "to close exp");
        return expr_exp(arg);
      }
      pos_ = start;
      fail("unknown identifier '" + word + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  ExprPtr parse_number() {
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // 'e' belonged to something else; not part of the literal
      }
    }
    if (pos_ == start) fail("expected number");
    const std::string token = text_.substr(start, pos_ - start);
    try {
      return expr_const(Cx(std::stod(token), 0.0));
    } catch (const std::exception&) {
      pos_ = start;
      fail("invalid numeric literal '" + token + "'");
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
};

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Printed form of a constant, plus the precedence level of that form so the
// surrounding printer can add parentheses where re-parsing would differ.
std::string const_text(Cx v) {
  const double re = v.real();
  const double im = v.imag();
  if (im == 0.0) return fmt_double(re);
  std::string im_part;
  if (im == 1.0) {
    im_part = "i";
  } else if (im == -1.0) {
    im_part = "-i";
  } else {
    im_part = fmt_double(im) + "*i";
  }
  if (re == 0.0) return im_part;
  if (im > 0.0) return "(" + fmt_double(re) + "+" + im_part + ")";
  if (im == -1.0) return "(" + fmt_double(re) + "-i)";
  return "(" + fmt_double(re) + "-" + fmt_double(-im) + "*i)";
}

// Precedence levels: add/sub 1, mul/div 2, unary 3, pow 4, atom 5.
int print_level(const ExprPtr& e, const std::string& text) {
  switch (e->kind) {
    case ExprKind::kAdd:
    case ExprKind::kSub:
      return 1;
    case ExprKind::kMul:
    case ExprKind::kDiv:
      return 2;
    case ExprKind::kNeg:
      return 3;
    case ExprKind::kPowInt:
      return 4;
    case ExprKind::kZ:
    case ExprKind::kExp:
      return 5;
    case ExprKind::kConst:
      if (!text.empty() && text[0] == '(') return 5;
      if (text.find('*') != std::string::npos) return 2;
      if (!text.empty() && text[0] == '-') return 3;
      return 5;
  }
  return 5;
}

struct Printed {
  std::string text;
  int level;
};

Printed print_node(const ExprPtr& e);

std::string print_child(const ExprPtr& child, int min_level) {
  Printed p = print_node(child);
  if (p.level < min_level) return "(" + p.text + ")";
  return p.text;
}

Printed print_node(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::kZ:
      return {"z", 5};
    case ExprKind::kConst: {
      std::string t = const_text(e->value);
      return {t, print_level(e, t)};
    }
    case ExprKind::kAdd:
      return {print_child(e->lhs, 1) + "+" + print_child(e->rhs, 2), 1};
    case ExprKind::kSub:
      return {print_child(e->lhs, 1) + "-" + print_child(e->rhs, 2), 1};
    case ExprKind::kMul:
      return {print_child(e->lhs, 2) + "*" + print_child(e->rhs, 3), 2};
    case ExprKind::kDiv:
      return {print_child(e->lhs, 2) + "/" + print_child(e->rhs, 3), 2};
    case ExprKind::kNeg:
      return {"-" + print_child(e->lhs, 3), 3};
    case ExprKind::kPowInt:
      return {print_child(e->lhs, 5) + "^" + std::to_string(e->exponent), 4};
    case ExprKind::kExp:
      return {"exp(" + print_node(e->lhs).text + ")", 5};
  }
  raise(Errc::invalid_parameter, "unknown expression node");
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string pretty_print(const ExprPtr& e) { return print_node(e).text; }

Jet eval_jet(const ExprPtr& e, Cx z, int order) {
  switch (e->kind) {
    case ExprKind::kZ:
      return Jet::variable(z, order);
    case ExprKind::kConst:
      return Jet::constant(e->value, order);
    case ExprKind::kAdd:
      return eval_jet(e->lhs, z, order) + eval_jet(e->rhs, z, order);
    case ExprKind::kSub:
      return eval_jet(e->lhs, z, order) - eval_jet(e->rhs, z, order);
    case ExprKind::kMul:
      return eval_jet(e->lhs, z, order) * eval_jet(e->rhs, z, order);
    case ExprKind::kDiv:
      return eval_jet(e->lhs, z, order) * recip(eval_jet(e->rhs, z, order));
    case ExprKind::kNeg:
      return -eval_jet(e->lhs, z, order);
    case ExprKind::kPowInt:
      return pow_int(eval_jet(e->lhs, z, order), e->exponent);
    case ExprKind::kExp:
      return exp(eval_jet(e->lhs, z, order));
  }
  raise(Errc::invalid_parameter, "unknown expression node");
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::kZ:
      return true;
    case ExprKind::kConst:
      return a->value == b->value;
    case ExprKind::kPowInt:
      return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
    case ExprKind::kNeg:
    case ExprKind::kExp:
      return expr_equal(a->lhs, b->lhs);
    case ExprKind::kAdd:
    case ExprKind::kSub:
    case ExprKind::kMul:
    case ExprKind::kDiv:
      return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
  }
  return false;
}

bool contains_z(const ExprPtr& e) {
  if (!e) return false;
  if (e->kind == ExprKind::kZ) return true;
  return contains_z(e->lhs) || contains_z(e->rhs);
}

Cx parse_cx(const std::string& text) {
  ExprPtr e = parse_expr(text);
  if (contains_z(e))
    raise(Errc::invalid_parameter, "expected a constant expression, found 'z': " + text);
  return eval_jet(e, Cx(0.0), 0).value();
}

}  // namespace harmlab
