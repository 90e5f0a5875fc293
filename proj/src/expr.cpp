#include "elab/expr.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <utility>

namespace elab {

Expr Expr::constant(double v) {
  Expr e;
  e.kind = ExprKind::Const;
  e.value = v;
  return e;
}

Expr Expr::var(std::string n) {
  Expr e;
  e.kind = ExprKind::Var;
  e.name = std::move(n);
  return e;
}

static Expr make_unary(ExprKind k, Expr a) {
  Expr e;
  e.kind = k;
  e.args.push_back(std::move(a));
  return e;
}

static Expr make_binary(ExprKind k, Expr a, Expr b) {
  Expr e;
  e.kind = k;
  e.args.reserve(2);
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}

Expr Expr::neg(Expr a) { return make_unary(ExprKind::Neg, std::move(a)); }
Expr Expr::add(Expr a, Expr b) { return make_binary(ExprKind::Add, std::move(a), std::move(b)); }
Expr Expr::sub(Expr a, Expr b) { return make_binary(ExprKind::Sub, std::move(a), std::move(b)); }
Expr Expr::mul(Expr a, Expr b) { return make_binary(ExprKind::Mul, std::move(a), std::move(b)); }
Expr Expr::div(Expr a, Expr b) { return make_binary(ExprKind::Div, std::move(a), std::move(b)); }
Expr Expr::exp(Expr a) { return make_unary(ExprKind::Exp, std::move(a)); }
Expr Expr::log(Expr a) { return make_unary(ExprKind::Log, std::move(a)); }

Expr Expr::pow(Expr base, double exponent) {
  Expr e = make_unary(ExprKind::Pow, std::move(base));
  e.value = exponent;
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Const:
      return a.value == b.value;
    case ExprKind::Var:
      return a.name == b.name;
    case ExprKind::Pow:
      return a.value == b.value && a.args[0] == b.args[0];
    default:
      if (a.args.size() != b.args.size()) return false;
      for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!(a.args[i] == b.args[i])) return false;
      return true;
  }
}

// Total order on doubles via the sign-folded bit pattern.
static std::int64_t ordered_bits(double v) {
  auto u = std::bit_cast<std::int64_t>(v);
  return u < 0 ? std::int64_t(0x8000000000000000ULL) - u : u;
}

int compare(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return int(a.kind) < int(b.kind) ? -1 : 1;
  switch (a.kind) {
    case ExprKind::Const: {
      auto x = ordered_bits(a.value), y = ordered_bits(b.value);
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    case ExprKind::Var:
      return a.name.compare(b.name) < 0 ? -1 : (a.name == b.name ? 0 : 1);
    default: {
      if (a.kind == ExprKind::Pow) {
        auto x = ordered_bits(a.value), y = ordered_bits(b.value);
        if (x != y) return x < y ? -1 : 1;
      }
      if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
      for (std::size_t i = 0; i < a.args.size(); ++i) {
        int c = compare(a.args[i], b.args[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
}

bool references(const Expr& e, std::string_view var) {
  if (e.kind == ExprKind::Var) return e.name == var;
  for (const Expr& a : e.args)
    if (references(a, var)) return true;
  return false;
}

void collect_variables(const Expr& e, std::set<std::string>& out) {
  if (e.kind == ExprKind::Var) {
    out.insert(e.name);
    return;
  }
  for (const Expr& a : e.args) collect_variables(a, out);
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {

// Precedence levels: additive 1, multiplicative 2, unary minus 3, power 4.
void render(const Expr& e, int parent_level, std::string& out) {
  switch (e.kind) {
    case ExprKind::Const: {
      if (e.value < 0 && parent_level > 1) {
        out += '(';
        out += format_double(e.value);
        out += ')';
      } else {
        out += format_double(e.value);
      }
      return;
    }
    case ExprKind::Var:
      out += e.name;
      return;
    case ExprKind::Neg: {
      bool paren = parent_level > 3;
      if (paren) out += '(';
      out += '-';
      render(e.args[0], 3, out);
      if (paren) out += ')';
      return;
    }
    case ExprKind::Add:
    case ExprKind::Sub: {
      bool paren = parent_level > 1;
      if (paren) out += '(';
      render(e.args[0], 1, out);
      // Render `a + -b` (and `a + (-c)*b`) as subtraction for readability.
      const Expr& rhs = e.args[1];
      if (e.kind == ExprKind::Add && rhs.kind == ExprKind::Neg) {
        out += " - ";
        render(rhs.args[0], 2, out);
      } else if (e.kind == ExprKind::Add && rhs.kind == ExprKind::Const && rhs.value < 0) {
        out += " - ";
        out += format_double(-rhs.value);
      } else {
        out += (e.kind == ExprKind::Add) ? " + " : " - ";
        render(rhs, 2, out);
      }
      if (paren) out += ')';
      return;
    }
    case ExprKind::Mul:
    case ExprKind::Div: {
      bool paren = parent_level > 2;
      if (paren) out += '(';
      render(e.args[0], 2, out);
      out += (e.kind == ExprKind::Mul) ? "*" : "/";
      render(e.args[1], 3, out);
      if (paren) out += ')';
      return;
    }
    case ExprKind::Pow: {
      render(e.args[0], 5, out);  // any non-atom base gets parentheses
      out += '^';
      out += format_double(e.value);
      return;
    }
    case ExprKind::Exp:
    case ExprKind::Log: {
      out += (e.kind == ExprKind::Exp) ? "exp(" : "log(";
      render(e.args[0], 0, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  render(e, 0, out);
  return out;
}

}  // namespace elab
