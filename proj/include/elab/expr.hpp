// Arithmetic expression trees: the representation of structural equations.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace elab {

enum class ExprKind : std::uint8_t {
  Const,
  Var,
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Pow,  // base in args[0], literal exponent in value
  Exp,
  Log,
};

struct Expr {
  ExprKind kind = ExprKind::Const;
  double value = 0.0;      // Const payload, or Pow exponent
  std::string name;        // Var payload
  std::vector<Expr> args;  // operands

  static Expr constant(double v);
  static Expr var(std::string n);
  static Expr neg(Expr a);
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr div(Expr a, Expr b);
  static Expr pow(Expr base, double exponent);
  static Expr exp(Expr a);
  static Expr log(Expr a);

  bool is_const() const { return kind == ExprKind::Const; }
  bool is_const(double v) const { return kind == ExprKind::Const && value == v; }
};

bool operator==(const Expr& a, const Expr& b);
inline bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

// Total order used for canonical sorting of commutative chains.
int compare(const Expr& a, const Expr& b);

bool references(const Expr& e, std::string_view var);
void collect_variables(const Expr& e, std::set<std::string>& out);

// Renders with minimal parentheses; numeric literals use the shortest
// round-trip form, so reparsing recovers the identical tree.
std::string to_string(const Expr& e);

std::string format_double(double v);

}  // namespace elab
