#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace asmeval {

// The eight 32-bit general-purpose registers, in canonical order.
enum class Reg32 : uint8_t { Eax, Ebx, Ecx, Edx, Esi, Edi, Ebp, Esp };
inline constexpr size_t kNumRegs = 8;

const char* reg32_name(Reg32 r);

// A register reference: a width-bits view into a parent 32-bit register,
// starting at bit `shift` (AH is {Eax, 8, 8}).
struct RegRef {
  Reg32 base;
  uint8_t width;  // 8, 16 or 32
  uint8_t shift;  // 0 or 8
  std::string name;

  bool operator==(const RegRef& o) const {
    return base == o.base && width == o.width && shift == o.shift;
  }
};

// Lookup is case-insensitive; returns nullopt for anything outside the
// supported IA-32 set.
std::optional<RegRef> lookup_register(const std::string& name);

enum class SizeHint : uint8_t { Byte = 8, Word = 16, Dword = 32 };

struct Immediate {
  uint32_t value;
  std::optional<SizeHint> width_hint;
};

struct MemoryOperand {
  std::optional<RegRef> base;
  std::optional<RegRef> index;
  uint8_t scale = 1;  // 1, 2, 4 or 8
  int32_t displacement = 0;
  std::optional<SizeHint> size_hint;
};

struct LabelRef {
  std::string name;
};

struct Operand;

// BYTE/WORD/DWORD prefix wrapping another operand.
struct SizePrefixed {
  std::vector<Operand> inner;  // exactly one element
  SizeHint size;
};

struct Operand {
  std::variant<RegRef, Immediate, MemoryOperand, LabelRef, SizePrefixed> value;
};

const Operand& strip_size_prefix(const Operand& op);
std::optional<SizeHint> size_prefix_of(const Operand& op);

inline bool is_register(const Operand& op) {
  return std::holds_alternative<RegRef>(strip_size_prefix(op).value);
}
inline bool is_immediate(const Operand& op) {
  return std::holds_alternative<Immediate>(strip_size_prefix(op).value);
}
inline bool is_memory(const Operand& op) {
  return std::holds_alternative<MemoryOperand>(strip_size_prefix(op).value);
}
inline bool is_label_ref(const Operand& op) {
  return std::holds_alternative<LabelRef>(strip_size_prefix(op).value);
}
const RegRef& as_register(const Operand& op);
const Immediate& as_immediate(const Operand& op);
const MemoryOperand& as_memory(const Operand& op);
const LabelRef& as_label_ref(const Operand& op);

enum class Mnemonic : uint8_t {
  Mov, Xchg, Lea,
  Push, Pop,
  Add, Sub, Inc, Dec, Neg, Mul,
  Xor, And, Or, Not,
  Test, Cmp,
  Shl, Shr,
  Nop,
  Jmp, Je, Jne, Js, Jns,
  Loop,
  Int,
  LabelOnly,
};

const char* mnemonic_name(Mnemonic m);

// Case-insensitive; jz/jnz map onto Je/Jne.
std::optional<Mnemonic> lookup_mnemonic(const std::string& name);

bool is_jump(Mnemonic m);         // jmp + conditional jumps + loop
bool is_conditional_jump(Mnemonic m);

struct Instruction {
  std::optional<std::string> label;  // defining label, if any
  Mnemonic mnemonic = Mnemonic::Nop;
  std::vector<Operand> operands;
  int source_line = 0;
};

}  // namespace asmeval
