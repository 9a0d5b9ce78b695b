#include "asmeval/normalize.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

// Simplification works bottom-up: every rule below takes already-normalized
// children and returns a normalized node, so one pass reaches a fixpoint.
// Canonical forms chosen here:
//   - commutative operands sorted by compare_expr, constants last;
//   - sub with a constant rhs becomes add of the negated constant;
//   - x+x and mul-by-power-of-two become shl;
//   - low-bit masks become zext(extract(...)), and concat with a zero high
//     part becomes zext, so the two spellings of "low byte of x" meet.

namespace asmeval {

namespace {

bool is_pow2(uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

unsigned log2_u64(uint64_t v) {
  unsigned n = 0;
  while (v >>= 1) n++;
  return n;
}

ExprRef simplify_unary(UnaryOp op, const ExprRef& x, unsigned hi, unsigned lo, unsigned width);
ExprRef simplify_binary(BinaryOp op, ExprRef a, ExprRef b);

ExprRef simplify_extract(unsigned hi, unsigned lo, const ExprRef& x) {
  if (lo == 0 && hi == x->width - 1) return x;
  if (x->is_const()) {
    return mk_const(eval_unop(UnaryOp::Extract, x->value, x->width, hi - lo + 1, hi, lo),
                    hi - lo + 1);
  }
  if (x->kind == ExprKind::Unary && x->un_op == UnaryOp::Extract) {
    return simplify_extract(hi + x->lo, lo + x->lo, x->a);
  }
  if (x->kind == ExprKind::Unary && x->un_op == UnaryOp::ZeroExtend) {
    const unsigned iw = x->a->width;
    if (hi < iw) return simplify_extract(hi, lo, x->a);
    if (lo >= iw) return mk_const(0, hi - lo + 1);
    // straddles the zero padding: keep the live low part, pad the rest
    return simplify_unary(UnaryOp::ZeroExtend, simplify_extract(iw - 1, lo, x->a), 0, 0,
                          hi - lo + 1);
  }
  if (x->kind == ExprKind::Unary && x->un_op == UnaryOp::SignExtend) {
    if (hi < x->a->width) return simplify_extract(hi, lo, x->a);
  }
  if (x->kind == ExprKind::Binary && x->bin_op == BinaryOp::Concat) {
    const unsigned low_w = x->b->width;
    if (hi < low_w) return simplify_extract(hi, lo, x->b);
    if (lo >= low_w) return simplify_extract(hi - low_w, lo - low_w, x->a);
  }
  return mk_extract(hi, lo, x);
}

ExprRef simplify_unary(UnaryOp op, const ExprRef& x, unsigned hi, unsigned lo, unsigned width) {
  switch (op) {
    case UnaryOp::Not:
      if (x->is_const()) return mk_const(eval_unop(op, x->value, x->width, x->width, 0, 0), x->width);
      if (x->kind == ExprKind::Unary && x->un_op == UnaryOp::Not) return x->a;
      return mk_not(x);
    case UnaryOp::Neg:
      if (x->is_const()) return mk_const(eval_unop(op, x->value, x->width, x->width, 0, 0), x->width);
      if (x->kind == ExprKind::Unary && x->un_op == UnaryOp::Neg) return x->a;
      return mk_neg(x);
    case UnaryOp::Extract:
      return simplify_extract(hi, lo, x);
    case UnaryOp::ZeroExtend:
      if (width == x->width) return x;
      if (x->is_const()) return mk_const(x->value, width);
      if (x->kind == ExprKind::Unary && x->un_op == UnaryOp::ZeroExtend) {
        return mk_zext(width, x->a);
      }
      return mk_zext(width, x);
    case UnaryOp::SignExtend:
      if (width == x->width) return x;
      if (x->is_const()) {
        return mk_const(eval_unop(op, x->value, x->width, width, 0, 0), width);
      }
      if (x->kind == ExprKind::Unary && x->un_op == UnaryOp::SignExtend) {
        return mk_sext(width, x->a);
      }
      return mk_sext(width, x);
  }
  return x;
}

// Flatten an add tree into terms, summing constants.
void flatten_add(const ExprRef& e, std::vector<ExprRef>& terms, uint64_t& const_sum) {
  if (e->kind == ExprKind::Binary && e->bin_op == BinaryOp::Add) {
    flatten_add(e->a, terms, const_sum);
    flatten_add(e->b, terms, const_sum);
  } else if (e->is_const()) {
    const_sum += e->value;
  } else {
    terms.push_back(e);
  }
}

ExprRef rebuild_add(std::vector<ExprRef> terms, uint64_t const_sum, unsigned width) {
  const_sum &= width_mask(width);
  std::sort(terms.begin(), terms.end(),
            [](const ExprRef& a, const ExprRef& b) { return compare_expr(a, b) < 0; });
  // x + x -> shl(x, 1)
  std::vector<ExprRef> merged;
  for (size_t i = 0; i < terms.size();) {
    if (i + 1 < terms.size() && compare_expr(terms[i], terms[i + 1]) == 0) {
      merged.push_back(simplify_binary(BinaryOp::Shl, terms[i], mk_const(1, width)));
      i += 2;
    } else {
      merged.push_back(terms[i]);
      i += 1;
    }
  }
  std::sort(merged.begin(), merged.end(),
            [](const ExprRef& a, const ExprRef& b) { return compare_expr(a, b) < 0; });
  ExprRef acc;
  for (auto& t : merged) {
    acc = acc ? mk_add(acc, t) : t;
  }
  if (!acc) return mk_const(const_sum, width);
  if (const_sum != 0) acc = mk_add(acc, mk_const(const_sum, width));
  return acc;
}

ExprRef order_commutative(BinaryOp op, ExprRef a, ExprRef b) {
  // constants sort last (Const has the lowest kind rank, so reverse order)
  bool swap;
  if (a->is_const() != b->is_const()) {
    swap = a->is_const();
  } else {
    swap = compare_expr(a, b) > 0;
  }
  return swap ? mk_binary(op, std::move(b), std::move(a)) : mk_binary(op, std::move(a), std::move(b));
}

ExprRef simplify_binary(BinaryOp op, ExprRef a, ExprRef b) {
  const unsigned w = (op == BinaryOp::Concat) ? a->width + b->width
                    : (op == BinaryOp::Eq || op == BinaryOp::Ult || op == BinaryOp::Slt) ? 1
                                                                                          : a->width;
  if (a->is_const() && b->is_const() && op != BinaryOp::Concat) {
    return mk_const(eval_binop(op, a->value, b->value, a->width), w);
  }

  switch (op) {
    case BinaryOp::Add: {
      std::vector<ExprRef> terms;
      uint64_t csum = 0;
      flatten_add(a, terms, csum);
      flatten_add(b, terms, csum);
      return rebuild_add(std::move(terms), csum, w);
    }
    case BinaryOp::Sub:
      if (compare_expr(a, b) == 0) return mk_const(0, w);
      if (b->is_const()) {
        return simplify_binary(BinaryOp::Add, a, mk_const(~b->value + 1, w));
      }
      if (a->is_const(0)) return simplify_unary(UnaryOp::Neg, b, 0, 0, w);
      return mk_sub(a, b);
    case BinaryOp::Mul:
      if (a->is_const()) std::swap(a, b);
      if (b->is_const(0)) return b;
      if (b->is_const(1)) return a;
      if (b->is_const() && is_pow2(b->value)) {
        return simplify_binary(BinaryOp::Shl, a, mk_const(log2_u64(b->value), w));
      }
      return order_commutative(op, std::move(a), std::move(b));
    case BinaryOp::And: {
      if (a->is_const()) std::swap(a, b);
      if (compare_expr(a, b) == 0) return a;
      if (b->is_const(0)) return b;
      if (b->is_const(width_mask(w))) return a;
      // low-bit mask -> zext(extract)
      if (b->is_const() && is_pow2(b->value + 1)) {
        const unsigned k = log2_u64(b->value + 1);
        return simplify_unary(UnaryOp::ZeroExtend, simplify_extract(k - 1, 0, a), 0, 0, w);
      }
      return order_commutative(op, std::move(a), std::move(b));
    }
    case BinaryOp::Or:
      if (a->is_const()) std::swap(a, b);
      if (compare_expr(a, b) == 0) return a;
      if (b->is_const(0)) return a;
      if (b->is_const(width_mask(w))) return b;
      return order_commutative(op, std::move(a), std::move(b));
    case BinaryOp::Xor:
      if (a->is_const()) std::swap(a, b);
      if (compare_expr(a, b) == 0) return mk_const(0, w);
      if (b->is_const(0)) return a;
      if (b->is_const(width_mask(w))) return simplify_unary(UnaryOp::Not, a, 0, 0, w);
      return order_commutative(op, std::move(a), std::move(b));
    case BinaryOp::Shl:
    case BinaryOp::LShr:
      if (b->is_const(0)) return a;
      if (b->is_const() && b->value >= w) return mk_const(0, w);
      if (a->is_const(0)) return a;
      return mk_binary(op, a, b);
    case BinaryOp::Concat: {
      if (a->is_const() && b->is_const()) {
        return mk_const((a->value << b->width) | b->value, w);
      }
      if (a->is_const(0)) return simplify_unary(UnaryOp::ZeroExtend, b, 0, 0, w);
      // adjacent extracts of the same subject fuse back together
      auto fuse = [](const ExprRef& x, const ExprRef& y) -> ExprRef {
        if (x->kind == ExprKind::Unary && x->un_op == UnaryOp::Extract &&
            y->kind == ExprKind::Unary && y->un_op == UnaryOp::Extract &&
            compare_expr(x->a, y->a) == 0 && x->lo == y->hi + 1) {
          return simplify_extract(x->hi, y->lo, x->a);
        }
        return nullptr;
      };
      if (auto f = fuse(a, b)) return f;
      if (b->kind == ExprKind::Binary && b->bin_op == BinaryOp::Concat) {
        if (auto f = fuse(a, b->a)) return simplify_binary(BinaryOp::Concat, f, b->b);
      }
      return mk_concat(a, b);
    }
    case BinaryOp::Eq:
      if (compare_expr(a, b) == 0) return mk_const(1, 1);
      return order_commutative(op, std::move(a), std::move(b));
    case BinaryOp::Ult:
    case BinaryOp::Slt:
      if (compare_expr(a, b) == 0) return mk_const(0, 1);
      return mk_binary(op, a, b);
  }
  return mk_binary(op, a, b);
}

ExprRef simplify_ite(const ExprRef& c, const ExprRef& t, const ExprRef& e) {
  if (c->is_const()) return c->value ? t : e;
  if (compare_expr(t, e) == 0) return t;
  return mk_ite(c, t, e);
}

}  // namespace

ExprRef normalize(const ExprRef& e) {
  switch (e->kind) {
    case ExprKind::Const:
    case ExprKind::Symbol:
    case ExprKind::Undef:
      return e;
    case ExprKind::Unary:
      return simplify_unary(e->un_op, normalize(e->a), e->hi, e->lo, e->width);
    case ExprKind::Binary:
      return simplify_binary(e->bin_op, normalize(e->a), normalize(e->b));
    case ExprKind::Ite:
      return simplify_ite(normalize(e->a), normalize(e->b), normalize(e->c));
  }
  return e;
}

}  // namespace asmeval
