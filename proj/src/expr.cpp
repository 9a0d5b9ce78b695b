#include "asmeval/expr.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace asmeval {

uint64_t width_mask(unsigned width) {
  assert(width >= 1 && width <= 64);
  return width == 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
}

static int64_t as_signed(uint64_t v, unsigned width) {
  if (width < 64 && (v >> (width - 1)) & 1) {
    return static_cast<int64_t>(v | ~width_mask(width));
  }
  return static_cast<int64_t>(v);
}

ExprRef mk_const(uint64_t value, unsigned width) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Const;
  e->width = width;
  e->value = value & width_mask(width);
  return e;
}

ExprRef mk_symbol(std::string name, unsigned width) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Symbol;
  e->width = width;
  e->name = std::move(name);
  return e;
}

ExprRef mk_undef(std::string id, unsigned width) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Undef;
  e->width = width;
  e->name = std::move(id);
  return e;
}

ExprRef mk_unary(UnaryOp op, ExprRef child) {
  assert(op == UnaryOp::Not || op == UnaryOp::Neg);
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Unary;
  e->un_op = op;
  e->width = child->width;
  e->a = std::move(child);
  return e;
}

ExprRef mk_extract(unsigned hi, unsigned lo, ExprRef child) {
  assert(hi < child->width && lo <= hi);
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Unary;
  e->un_op = UnaryOp::Extract;
  e->width = hi - lo + 1;
  e->hi = hi;
  e->lo = lo;
  e->a = std::move(child);
  return e;
}

ExprRef mk_zext(unsigned width, ExprRef child) {
  assert(width >= child->width && width <= 64);
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Unary;
  e->un_op = UnaryOp::ZeroExtend;
  e->width = width;
  e->a = std::move(child);
  return e;
}

ExprRef mk_sext(unsigned width, ExprRef child) {
  assert(width >= child->width && width <= 64);
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Unary;
  e->un_op = UnaryOp::SignExtend;
  e->width = width;
  e->a = std::move(child);
  return e;
}

ExprRef mk_binary(BinaryOp op, ExprRef lhs, ExprRef rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Binary;
  e->bin_op = op;
  switch (op) {
    case BinaryOp::Concat:
      assert(lhs->width + rhs->width <= 64);
      e->width = lhs->width + rhs->width;
      break;
    case BinaryOp::Eq:
    case BinaryOp::Ult:
    case BinaryOp::Slt:
      assert(lhs->width == rhs->width);
      e->width = 1;
      break;
    default:
      assert(lhs->width == rhs->width);
      e->width = lhs->width;
      break;
  }
  e->a = std::move(lhs);
  e->b = std::move(rhs);
  return e;
}

ExprRef mk_ite(ExprRef cond, ExprRef then_e, ExprRef else_e) {
  assert(cond->width == 1 && then_e->width == else_e->width);
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Ite;
  e->width = then_e->width;
  e->a = std::move(cond);
  e->b = std::move(then_e);
  e->c = std::move(else_e);
  return e;
}

static int kind_rank(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Const: return 0;
    case ExprKind::Symbol: return 1;
    case ExprKind::Undef: return 2;
    case ExprKind::Unary: return 3;
    case ExprKind::Binary: return 4;
    case ExprKind::Ite: return 5;
  }
  return 6;
}

static int cmp_u64(uint64_t a, uint64_t b) { return a < b ? -1 : a > b ? 1 : 0; }

int compare_expr(const ExprRef& a, const ExprRef& b) {
  if (a.get() == b.get()) return 0;
  if (int k = cmp_u64(kind_rank(*a), kind_rank(*b))) return k;
  if (int w = cmp_u64(a->width, b->width)) return w;
  switch (a->kind) {
    case ExprKind::Const:
      return cmp_u64(a->value, b->value);
    case ExprKind::Symbol:
    case ExprKind::Undef:
      return a->name.compare(b->name);
    case ExprKind::Unary: {
      if (int k = cmp_u64(static_cast<unsigned>(a->un_op), static_cast<unsigned>(b->un_op))) return k;
      if (int k = cmp_u64(a->hi, b->hi)) return k;
      if (int k = cmp_u64(a->lo, b->lo)) return k;
      return compare_expr(a->a, b->a);
    }
    case ExprKind::Binary: {
      if (int k = cmp_u64(static_cast<unsigned>(a->bin_op), static_cast<unsigned>(b->bin_op))) return k;
      if (int k = compare_expr(a->a, b->a)) return k;
      return compare_expr(a->b, b->b);
    }
    case ExprKind::Ite: {
      if (int k = compare_expr(a->a, b->a)) return k;
      if (int k = compare_expr(a->b, b->b)) return k;
      return compare_expr(a->c, b->c);
    }
  }
  return 0;
}

bool struct_equal_undef(const ExprRef& a, const ExprRef& b, bool undef_wild) {
  if (a->width != b->width) return false;
  if (undef_wild && (a->kind == ExprKind::Undef || b->kind == ExprKind::Undef)) return true;
  if (a->kind == ExprKind::Undef && b->kind == ExprKind::Undef) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::Const: return a->value == b->value;
    case ExprKind::Symbol: return a->name == b->name;
    case ExprKind::Undef: return true;
    case ExprKind::Unary:
      return a->un_op == b->un_op && a->hi == b->hi && a->lo == b->lo &&
             struct_equal_undef(a->a, b->a, undef_wild);
    case ExprKind::Binary:
      return a->bin_op == b->bin_op && struct_equal_undef(a->a, b->a, undef_wild) &&
             struct_equal_undef(a->b, b->b, undef_wild);
    case ExprKind::Ite:
      return struct_equal_undef(a->a, b->a, undef_wild) &&
             struct_equal_undef(a->b, b->b, undef_wild) &&
             struct_equal_undef(a->c, b->c, undef_wild);
  }
  return false;
}

bool contains_undef(const ExprRef& e) {
  switch (e->kind) {
    case ExprKind::Const:
    case ExprKind::Symbol:
      return false;
    case ExprKind::Undef:
      return true;
    case ExprKind::Unary:
      return contains_undef(e->a);
    case ExprKind::Binary:
      return contains_undef(e->a) || contains_undef(e->b);
    case ExprKind::Ite:
      return contains_undef(e->a) || contains_undef(e->b) || contains_undef(e->c);
  }
  return false;
}

void collect_symbols(const ExprRef& e, SymbolSet& out) {
  switch (e->kind) {
    case ExprKind::Const:
    case ExprKind::Undef:
      return;
    case ExprKind::Symbol:
      out.emplace(e->name, e->width);
      return;
    case ExprKind::Unary:
      collect_symbols(e->a, out);
      return;
    case ExprKind::Binary:
      collect_symbols(e->a, out);
      collect_symbols(e->b, out);
      return;
    case ExprKind::Ite:
      collect_symbols(e->a, out);
      collect_symbols(e->b, out);
      collect_symbols(e->c, out);
      return;
  }
}

uint64_t eval_unop(UnaryOp op, uint64_t v, unsigned child_width, unsigned result_width,
                   unsigned hi, unsigned lo) {
  switch (op) {
    case UnaryOp::Not:
      return ~v & width_mask(result_width);
    case UnaryOp::Neg:
      return (~v + 1) & width_mask(result_width);
    case UnaryOp::Extract:
      (void)hi;
      return (v >> lo) & width_mask(result_width);
    case UnaryOp::ZeroExtend:
      return v & width_mask(child_width);
    case UnaryOp::SignExtend:
      return static_cast<uint64_t>(as_signed(v, child_width)) & width_mask(result_width);
  }
  return 0;
}

uint64_t eval_binop(BinaryOp op, uint64_t a, uint64_t b, unsigned w) {
  const uint64_t mask = width_mask(w);
  a &= mask;
  b &= mask;
  switch (op) {
    case BinaryOp::Add: return (a + b) & mask;
    case BinaryOp::Sub: return (a - b) & mask;
    case BinaryOp::Mul: return (a * b) & mask;
    case BinaryOp::And: return a & b;
    case BinaryOp::Or: return a | b;
    case BinaryOp::Xor: return a ^ b;
    case BinaryOp::Shl: return b >= w ? 0 : (a << b) & mask;
    case BinaryOp::LShr: return b >= w ? 0 : a >> b;
    case BinaryOp::Concat: return 0;  // width-dependent, handled in eval_expr
    case BinaryOp::Eq: return a == b ? 1 : 0;
    case BinaryOp::Ult: return a < b ? 1 : 0;
    case BinaryOp::Slt: return as_signed(a, w) < as_signed(b, w) ? 1 : 0;
  }
  return 0;
}

std::optional<uint64_t> eval_expr(const ExprRef& e, const Assignment& env) {
  switch (e->kind) {
    case ExprKind::Const:
      return e->value;
    case ExprKind::Symbol: {
      auto it = env.find(e->name);
      if (it == env.end()) return std::nullopt;
      return it->second & width_mask(e->width);
    }
    case ExprKind::Undef:
      return std::nullopt;
    case ExprKind::Unary: {
      auto v = eval_expr(e->a, env);
      if (!v) return std::nullopt;
      return eval_unop(e->un_op, *v, e->a->width, e->width, e->hi, e->lo);
    }
    case ExprKind::Binary: {
      auto va = eval_expr(e->a, env);
      auto vb = eval_expr(e->b, env);
      if (!va || !vb) return std::nullopt;
      if (e->bin_op == BinaryOp::Concat) {
        return ((*va << e->b->width) | *vb) & width_mask(e->width);
      }
      return eval_binop(e->bin_op, *va, *vb, e->a->width);
    }
    case ExprKind::Ite: {
      auto vc = eval_expr(e->a, env);
      if (!vc) return std::nullopt;
      return eval_expr(*vc ? e->b : e->c, env);
    }
  }
  return std::nullopt;
}

static const char* unop_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Not: return "not";
    case UnaryOp::Neg: return "neg";
    case UnaryOp::Extract: return "extract";
    case UnaryOp::ZeroExtend: return "zext";
    case UnaryOp::SignExtend: return "sext";
  }
  return "?";
}

static const char* binop_name(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "add";
    case BinaryOp::Sub: return "sub";
    case BinaryOp::Mul: return "mul";
    case BinaryOp::And: return "and";
    case BinaryOp::Or: return "or";
    case BinaryOp::Xor: return "xor";
    case BinaryOp::Shl: return "shl";
    case BinaryOp::LShr: return "lshr";
    case BinaryOp::Concat: return "concat";
    case BinaryOp::Eq: return "eq";
    case BinaryOp::Ult: return "ult";
    case BinaryOp::Slt: return "slt";
  }
  return "?";
}

static void print_expr(std::ostream& os, const ExprRef& e) {
  switch (e->kind) {
    case ExprKind::Const:
      os << "#x" << std::hex << e->value << std::dec << ":" << e->width;
      return;
    case ExprKind::Symbol:
      os << e->name;
      return;
    case ExprKind::Undef:
      os << "undef:" << e->width;
      return;
    case ExprKind::Unary:
      os << "(" << unop_name(e->un_op);
      if (e->un_op == UnaryOp::Extract) {
        os << " " << e->hi << " " << e->lo;
      } else if (e->un_op == UnaryOp::ZeroExtend || e->un_op == UnaryOp::SignExtend) {
        os << " " << e->width;
      }
      os << " ";
      print_expr(os, e->a);
      os << ")";
      return;
    case ExprKind::Binary:
      os << "(" << binop_name(e->bin_op) << " ";
      print_expr(os, e->a);
      os << " ";
      print_expr(os, e->b);
      os << ")";
      return;
    case ExprKind::Ite:
      os << "(ite ";
      print_expr(os, e->a);
      os << " ";
      print_expr(os, e->b);
      os << " ";
      print_expr(os, e->c);
      os << ")";
      return;
  }
}

std::string to_string(const ExprRef& e) {
  std::ostringstream os;
  print_expr(os, e);
  return os.str();
}

}  // namespace asmeval
