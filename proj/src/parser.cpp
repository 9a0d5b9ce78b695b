#include "asmeval/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace asmeval {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '$' ||
         c == '@' || c == '?';
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), is_ident_char);
}

// 0x1f, 1fh, 123, -5. Returns nullopt when the token is not numeric at all;
// throws on a numeric token that overflows 32 bits.
std::optional<uint32_t> parse_number(const std::string& tok) {
  if (tok.empty()) return std::nullopt;
  bool negative = tok[0] == '-';
  std::string body = negative ? tok.substr(1) : tok;
  if (body.empty()) return std::nullopt;

  int base = 10;
  if (body.size() > 2 && (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0)) {
    base = 16;
    body = body.substr(2);
  } else if (body.size() > 1 && (body.back() == 'h' || body.back() == 'H') &&
             std::isdigit(static_cast<unsigned char>(body[0]))) {
    base = 16;
    body.pop_back();
  }
  if (body.empty()) return std::nullopt;

  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value, base);
  if (ec == std::errc::result_out_of_range) throw std::out_of_range(tok);
  if (ec != std::errc{} || ptr != body.data() + body.size()) return std::nullopt;
  if (value > 0xFFFFFFFFull) throw std::out_of_range(tok);

  uint32_t v = static_cast<uint32_t>(value);
  return negative ? static_cast<uint32_t>(-static_cast<int64_t>(v)) : v;
}

std::optional<SizeHint> parse_size_keyword(const std::string& tok) {
  std::string t = to_lower(tok);
  if (t == "byte") return SizeHint::Byte;
  if (t == "word") return SizeHint::Word;
  if (t == "dword") return SizeHint::Dword;
  return std::nullopt;
}

struct LineError {
  std::string message;
};

[[noreturn]] void fail(const std::string& msg) { throw LineError{msg}; }

// [base + index*scale + disp], any term order, +/- displacement terms.
MemoryOperand parse_memory(const std::string& inside) {
  MemoryOperand mem;
  int64_t disp = 0;

  size_t i = 0;
  int sign = 1;
  bool expect_term = true;
  while (i < inside.size()) {
    while (i < inside.size() && std::isspace(static_cast<unsigned char>(inside[i]))) i++;
    if (i >= inside.size()) break;
    char c = inside[i];
    if (c == '+' || c == '-') {
      if (expect_term && c == '-') {
        // leading minus on a term: fold into the sign
      } else if (expect_term) {
        fail("malformed address expression");
      }
      sign = (c == '-') ? -sign : sign;
      expect_term = true;
      i++;
      continue;
    }
    size_t start = i;
    while (i < inside.size() && inside[i] != '+' && inside[i] != '-' &&
           !std::isspace(static_cast<unsigned char>(inside[i]))) {
      i++;
    }
    std::string term = inside.substr(start, i - start);
    expect_term = false;

    // reg*scale or scale*reg
    size_t star = term.find('*');
    if (star != std::string::npos) {
      std::string lhs = term.substr(0, star);
      std::string rhs = term.substr(star + 1);
      auto lreg = lookup_register(lhs);
      auto rreg = lookup_register(rhs);
      std::optional<RegRef> reg = lreg ? lreg : rreg;
      std::optional<uint32_t> scale = lreg ? parse_number(rhs) : parse_number(lhs);
      if (!reg || !scale) fail("malformed scaled-index term '" + term + "'");
      if (*scale != 1 && *scale != 2 && *scale != 4 && *scale != 8) {
        fail("invalid index scale " + std::to_string(*scale));
      }
      if (reg->width != 32) fail("index register must be 32-bit");
      if (mem.index) fail("multiple index registers");
      if (sign < 0) fail("negative register term in address");
      mem.index = *reg;
      mem.scale = static_cast<uint8_t>(*scale);
    } else if (auto reg = lookup_register(term)) {
      if (reg->width != 32) fail("address register must be 32-bit");
      if (sign < 0) fail("negative register term in address");
      if (!mem.base) {
        mem.base = *reg;
      } else if (!mem.index) {
        mem.index = *reg;
      } else {
        fail("too many registers in address");
      }
    } else if (auto num = parse_number(term)) {
      disp += sign * static_cast<int64_t>(static_cast<int32_t>(*num));
    } else {
      fail("unsupported address term '" + term + "'");
    }
    sign = 1;
  }
  if (expect_term && (mem.base || mem.index || disp != 0)) fail("malformed address expression");
  if (disp < INT32_MIN || disp > INT32_MAX) fail("displacement out of range");
  mem.displacement = static_cast<int32_t>(disp);
  return mem;
}

Operand parse_operand(const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) fail("empty operand");

  // optional size prefix, then the bare operand
  size_t sp = text.find_first_of(" \t[");
  if (sp != std::string::npos) {
    std::string head = text.substr(0, sp);
    if (auto size = parse_size_keyword(head)) {
      std::string rest = trim(text.substr(sp));
      if (rest.empty()) fail("size prefix with no operand");
      SizePrefixed wrapped;
      wrapped.size = *size;
      wrapped.inner.push_back(parse_operand(rest));
      if (is_label_ref(wrapped.inner.front())) fail("size prefix on a label reference");
      return Operand{std::move(wrapped)};
    }
  }

  if (text.front() == '[') {
    if (text.back() != ']') fail("unterminated memory operand");
    return Operand{parse_memory(text.substr(1, text.size() - 2))};
  }

  if (auto reg = lookup_register(text)) {
    return Operand{*reg};
  }

  try {
    if (auto num = parse_number(text)) {
      return Operand{Immediate{*num, std::nullopt}};
    }
  } catch (const std::out_of_range&) {
    fail("immediate '" + text + "' out of 32-bit range");
  }

  if (is_identifier(text)) {
    return Operand{LabelRef{text}};
  }
  fail("unparseable operand '" + text + "'");
}

std::vector<std::string> split_operands(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[') depth++;
    if (c == ']') depth--;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Instruction parse_statement(const std::string& stmt, int line_no) {
  Instruction instr;
  instr.source_line = line_no;
  std::string rest = stmt;

  // optional leading `label:`
  size_t colon = rest.find(':');
  if (colon != std::string::npos) {
    std::string head = trim(rest.substr(0, colon));
    if (is_identifier(head) && !lookup_register(head) && !lookup_mnemonic(head)) {
      instr.label = head;
      rest = trim(rest.substr(colon + 1));
    }
  }

  if (rest.empty()) {
    instr.mnemonic = Mnemonic::LabelOnly;
    if (!instr.label) fail("empty statement");
    return instr;
  }

  size_t sp = rest.find_first_of(" \t");
  std::string mnem_tok = sp == std::string::npos ? rest : rest.substr(0, sp);
  std::string operand_text = sp == std::string::npos ? "" : trim(rest.substr(sp));

  auto mnem = lookup_mnemonic(mnem_tok);
  if (!mnem) fail("unknown mnemonic '" + mnem_tok + "'");
  instr.mnemonic = *mnem;

  // `short`/`near` distance qualifiers affect encoding only; drop them
  if (is_jump(*mnem) && !operand_text.empty()) {
    size_t qs = operand_text.find_first_of(" \t");
    std::string first = to_lower(qs == std::string::npos ? operand_text : operand_text.substr(0, qs));
    if (first == "short" || first == "near") {
      if (qs == std::string::npos) fail("missing jump target");
      operand_text = trim(operand_text.substr(qs));
    }
  }

  if (!operand_text.empty()) {
    for (const std::string& part : split_operands(operand_text)) {
      std::string p = trim(part);
      if (p.empty()) {
        fail(part.empty() && operand_text.back() == ','
                 ? "missing second operand"
                 : "empty operand");
      }
      instr.operands.push_back(parse_operand(p));
    }
  }
  return instr;
}

}  // namespace

SourceSnippet split_snippet(const std::string& text) {
  SourceSnippet snip;
  snip.text = text;
  std::string cur;
  int line_no = 1;
  auto flush = [&](int no) {
    size_t semi = cur.find(';');
    if (semi != std::string::npos) cur = cur.substr(0, semi);
    std::string t = trim(cur);
    if (!t.empty()) {
      snip.lines.push_back(t);
      snip.line_numbers.push_back(no);
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      flush(line_no);
      line_no++;
    } else {
      cur += c;
    }
  }
  flush(line_no);
  return snip;
}

ParseResult parse_snippet(const std::string& text) {
  ParseResult result;
  SourceSnippet snip = split_snippet(text);
  for (size_t i = 0; i < snip.lines.size(); i++) {
    try {
      result.instructions.push_back(parse_statement(snip.lines[i], snip.line_numbers[i]));
    } catch (const LineError& e) {
      result.error = ParseError{snip.line_numbers[i], e.message + ", line " + std::to_string(snip.line_numbers[i])};
      result.instructions.clear();
      return result;
    }
  }
  return result;
}

}  // namespace asmeval
