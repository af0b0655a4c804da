#pragma once

#include <memory>
#include <string>

#include "harmlab/cx.hpp"
#include "harmlab/jet.hpp"

namespace harmlab {

// Expression mini-language for holomorphic functions on the disk.
// Grammar (whitespace ignored):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-'] integer)*
//   atom   := 'z' | 'i' | number | 'exp' '(' expr ')' | '(' expr ')'
// Complex constants are written as expressions, e.g. 0.4+0.2*i; the parser
// folds constant subtrees so they land in a single Const node.
enum class ExprKind { kZ, kConst, kAdd, kSub, kMul, kDiv, kNeg, kPowInt, kExp };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprKind kind = ExprKind::kZ;
  Cx value{0.0, 0.0};  // kConst
  int exponent = 0;    // kPowInt
  ExprPtr lhs = nullptr;
  ExprPtr rhs = nullptr;
};

ExprPtr expr_z();
ExprPtr expr_const(Cx value);
ExprPtr expr_add(ExprPtr a, ExprPtr b);
ExprPtr expr_sub(ExprPtr a, ExprPtr b);
ExprPtr expr_mul(ExprPtr a, ExprPtr b);
ExprPtr expr_div(ExprPtr a, ExprPtr b);
ExprPtr expr_neg(ExprPtr a);
ExprPtr expr_pow(ExprPtr base, int exponent);
ExprPtr expr_exp(ExprPtr a);

// Raises Errc::parse_error with the 0-based offset of the offending character.
ExprPtr parse_expr(const std::string& text);

// Minimal-parentheses form; parse_expr(pretty_print(e)) reproduces e.
std::string pretty_print(const ExprPtr& e);

Jet eval_jet(const ExprPtr& e, Cx z, int order);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);
bool contains_z(const ExprPtr& e);

// Parses an expression that must be constant (no z), e.g. CLI complex flags.
Cx parse_cx(const std::string& text);

}  // namespace harmlab
