#include "asmeval/asm_ir.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace asmeval {

const char* reg32_name(Reg32 r) {
  switch (r) {
    case Reg32::Eax: return "eax";
    case Reg32::Ebx: return "ebx";
    case Reg32::Ecx: return "ecx";
    case Reg32::Edx: return "edx";
    case Reg32::Esi: return "esi";
    case Reg32::Edi: return "edi";
    case Reg32::Ebp: return "ebp";
    case Reg32::Esp: return "esp";
  }
  return "?";
}

static std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::optional<RegRef> lookup_register(const std::string& name) {
  static const std::unordered_map<std::string, RegRef> table = [] {
    std::unordered_map<std::string, RegRef> t;
    auto add = [&](const char* n, Reg32 base, uint8_t w, uint8_t sh) {
      t.emplace(n, RegRef{base, w, sh, n});
    };
    add("eax", Reg32::Eax, 32, 0); add("ebx", Reg32::Ebx, 32, 0);
    add("ecx", Reg32::Ecx, 32, 0); add("edx", Reg32::Edx, 32, 0);
    add("esi", Reg32::Esi, 32, 0); add("edi", Reg32::Edi, 32, 0);
    add("ebp", Reg32::Ebp, 32, 0); add("esp", Reg32::Esp, 32, 0);
    add("ax", Reg32::Eax, 16, 0); add("bx", Reg32::Ebx, 16, 0);
    add("cx", Reg32::Ecx, 16, 0); add("dx", Reg32::Edx, 16, 0);
    add("si", Reg32::Esi, 16, 0); add("di", Reg32::Edi, 16, 0);
    add("bp", Reg32::Ebp, 16, 0); add("sp", Reg32::Esp, 16, 0);
    add("al", Reg32::Eax, 8, 0); add("ah", Reg32::Eax, 8, 8);
    add("bl", Reg32::Ebx, 8, 0); add("bh", Reg32::Ebx, 8, 8);
    add("cl", Reg32::Ecx, 8, 0); add("ch", Reg32::Ecx, 8, 8);
    add("dl", Reg32::Edx, 8, 0); add("dh", Reg32::Edx, 8, 8);
    return t;
  }();
  auto it = table.find(lower(name));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

const Operand& strip_size_prefix(const Operand& op) {
  if (auto* sp = std::get_if<SizePrefixed>(&op.value)) {
    return strip_size_prefix(sp->inner.front());
  }
  return op;
}

std::optional<SizeHint> size_prefix_of(const Operand& op) {
  if (auto* sp = std::get_if<SizePrefixed>(&op.value)) return sp->size;
  return std::nullopt;
}

const RegRef& as_register(const Operand& op) { return std::get<RegRef>(strip_size_prefix(op).value); }
const Immediate& as_immediate(const Operand& op) { return std::get<Immediate>(strip_size_prefix(op).value); }
const MemoryOperand& as_memory(const Operand& op) { return std::get<MemoryOperand>(strip_size_prefix(op).value); }
const LabelRef& as_label_ref(const Operand& op) { return std::get<LabelRef>(strip_size_prefix(op).value); }

const char* mnemonic_name(Mnemonic m) {
  switch (m) {
    case Mnemonic::Mov: return "mov";
    case Mnemonic::Xchg: return "xchg";
    case Mnemonic::Lea: return "lea";
    case Mnemonic::Push: return "push";
    case Mnemonic::Pop: return "pop";
    case Mnemonic::Add: return "add";
    case Mnemonic::Sub: return "sub";
    case Mnemonic::Inc: return "inc";
    case Mnemonic::Dec: return "dec";
    case Mnemonic::Neg: return "neg";
    case Mnemonic::Mul: return "mul";
    case Mnemonic::Xor: return "xor";
    case Mnemonic::And: return "and";
    case Mnemonic::Or: return "or";
    case Mnemonic::Not: return "not";
    case Mnemonic::Test: return "test";
    case Mnemonic::Cmp: return "cmp";
    case Mnemonic::Shl: return "shl";
    case Mnemonic::Shr: return "shr";
    case Mnemonic::Nop: return "nop";
    case Mnemonic::Jmp: return "jmp";
    case Mnemonic::Je: return "je";
    case Mnemonic::Jne: return "jne";
    case Mnemonic::Js: return "js";
    case Mnemonic::Jns: return "jns";
    case Mnemonic::Loop: return "loop";
    case Mnemonic::Int: return "int";
    case Mnemonic::LabelOnly: return "<label>";
  }
  return "?";
}

std::optional<Mnemonic> lookup_mnemonic(const std::string& name) {
  static const std::unordered_map<std::string, Mnemonic> table = {
      {"mov", Mnemonic::Mov},   {"xchg", Mnemonic::Xchg}, {"lea", Mnemonic::Lea},
      {"push", Mnemonic::Push}, {"pop", Mnemonic::Pop},   {"add", Mnemonic::Add},
      {"sub", Mnemonic::Sub},   {"inc", Mnemonic::Inc},   {"dec", Mnemonic::Dec},
      {"neg", Mnemonic::Neg},   {"mul", Mnemonic::Mul},   {"xor", Mnemonic::Xor},
      {"and", Mnemonic::And},   {"or", Mnemonic::Or},     {"not", Mnemonic::Not},
      {"test", Mnemonic::Test}, {"cmp", Mnemonic::Cmp},   {"shl", Mnemonic::Shl},
      {"shr", Mnemonic::Shr},   {"nop", Mnemonic::Nop},   {"jmp", Mnemonic::Jmp},
      {"je", Mnemonic::Je},     {"jz", Mnemonic::Je},     {"jne", Mnemonic::Jne},
      {"jnz", Mnemonic::Jne},   {"js", Mnemonic::Js},     {"jns", Mnemonic::Jns},
      {"loop", Mnemonic::Loop}, {"int", Mnemonic::Int},
  };
  auto it = table.find(lower(name));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

bool is_jump(Mnemonic m) {
  switch (m) {
    case Mnemonic::Jmp:
    case Mnemonic::Je:
    case Mnemonic::Jne:
    case Mnemonic::Js:
    case Mnemonic::Jns:
    case Mnemonic::Loop:
      return true;
    default:
      return false;
  }
}

bool is_conditional_jump(Mnemonic m) {
  return is_jump(m) && m != Mnemonic::Jmp;
}

}  // namespace asmeval
