#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

namespace asmeval {

// Fixed-width bit-vector expressions over named input symbols.
// Widths run from 1 to 64 bits; every node carries its width and the
// builders enforce the operator signatures.

enum class ExprKind { Const, Symbol, Undef, Unary, Binary, Ite };

enum class UnaryOp { Not, Neg, Extract, ZeroExtend, SignExtend };

enum class BinaryOp {
  Add,
  Sub,
  Mul,
  And,
  Or,
  Xor,
  Shl,
  LShr,
  Concat,
  Eq,
  Ult,
  Slt,
};

class Expr;
using ExprRef = std::shared_ptr<const Expr>;

class Expr {
 public:
  ExprKind kind;
  unsigned width;  // result width in bits

  uint64_t value = 0;  // Const payload, masked to width
  std::string name;    // Symbol/Undef identity

  UnaryOp un_op = UnaryOp::Not;
  BinaryOp bin_op = BinaryOp::Add;
  unsigned hi = 0, lo = 0;  // Extract bounds (bit indices into the child)

  ExprRef a, b, c;  // unary: a; binary: a,b; ite: a=cond, b=then, c=else

  bool is_const() const { return kind == ExprKind::Const; }
  bool is_const(uint64_t v) const { return is_const() && value == v; }
};

uint64_t width_mask(unsigned width);

ExprRef mk_const(uint64_t value, unsigned width);
ExprRef mk_symbol(std::string name, unsigned width);
ExprRef mk_undef(std::string id, unsigned width);
ExprRef mk_unary(UnaryOp op, ExprRef child);
ExprRef mk_extract(unsigned hi, unsigned lo, ExprRef child);
ExprRef mk_zext(unsigned width, ExprRef child);
ExprRef mk_sext(unsigned width, ExprRef child);
ExprRef mk_binary(BinaryOp op, ExprRef lhs, ExprRef rhs);
ExprRef mk_ite(ExprRef cond, ExprRef then_e, ExprRef else_e);

inline ExprRef mk_not(ExprRef x) { return mk_unary(UnaryOp::Not, std::move(x)); }
inline ExprRef mk_neg(ExprRef x) { return mk_unary(UnaryOp::Neg, std::move(x)); }
inline ExprRef mk_add(ExprRef a, ExprRef b) { return mk_binary(BinaryOp::Add, std::move(a), std::move(b)); }
inline ExprRef mk_sub(ExprRef a, ExprRef b) { return mk_binary(BinaryOp::Sub, std::move(a), std::move(b)); }
inline ExprRef mk_mul(ExprRef a, ExprRef b) { return mk_binary(BinaryOp::Mul, std::move(a), std::move(b)); }
inline ExprRef mk_and(ExprRef a, ExprRef b) { return mk_binary(BinaryOp::And, std::move(a), std::move(b)); }
inline ExprRef mk_or(ExprRef a, ExprRef b) { return mk_binary(BinaryOp::Or, std::move(a), std::move(b)); }
inline ExprRef mk_xor(ExprRef a, ExprRef b) { return mk_binary(BinaryOp::Xor, std::move(a), std::move(b)); }
inline ExprRef mk_shl(ExprRef a, ExprRef b) { return mk_binary(BinaryOp::Shl, std::move(a), std::move(b)); }
inline ExprRef mk_lshr(ExprRef a, ExprRef b) { return mk_binary(BinaryOp::LShr, std::move(a), std::move(b)); }
inline ExprRef mk_concat(ExprRef hi, ExprRef lo) { return mk_binary(BinaryOp::Concat, std::move(hi), std::move(lo)); }
inline ExprRef mk_eq(ExprRef a, ExprRef b) { return mk_binary(BinaryOp::Eq, std::move(a), std::move(b)); }
inline ExprRef mk_ult(ExprRef a, ExprRef b) { return mk_binary(BinaryOp::Ult, std::move(a), std::move(b)); }
inline ExprRef mk_slt(ExprRef a, ExprRef b) { return mk_binary(BinaryOp::Slt, std::move(a), std::move(b)); }

// Total order used for commutative-operand canonicalization. Returns
// <0, 0, >0 like strcmp; 0 means structurally identical.
int compare_expr(const ExprRef& a, const ExprRef& b);

inline bool struct_equal(const ExprRef& a, const ExprRef& b) {
  return compare_expr(a, b) == 0;
}

// Structural equality with the Undef matching rule: Undef nodes match any
// Undef of the same width regardless of id; in wild mode they match anything.
bool struct_equal_undef(const ExprRef& a, const ExprRef& b, bool undef_wild);

bool contains_undef(const ExprRef& e);

// Symbol name -> width, collected over the whole tree.
using SymbolSet = std::map<std::string, unsigned>;
void collect_symbols(const ExprRef& e, SymbolSet& out);

using Assignment = std::map<std::string, uint64_t>;

// Concrete evaluation under an assignment to every symbol in the tree.
// Returns nullopt if the tree contains an Undef node or an unbound symbol.
std::optional<uint64_t> eval_expr(const ExprRef& e, const Assignment& env);

// Shared constant semantics for fold and eval. Shift amounts >= width give 0.
uint64_t eval_unop(UnaryOp op, uint64_t v, unsigned child_width, unsigned result_width, unsigned hi, unsigned lo);
uint64_t eval_binop(BinaryOp op, uint64_t a, uint64_t b, unsigned operand_width);

std::string to_string(const ExprRef& e);

}  // namespace asmeval
