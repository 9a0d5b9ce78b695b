#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asmeval/asm_ir.hpp"

namespace asmeval {

// Raw snippet text split into trimmed statement lines; empty and
// comment-only lines are dropped, original line numbers kept.
struct SourceSnippet {
  std::string text;
  std::vector<std::string> lines;
  std::vector<int> line_numbers;  // 1-based, parallel to lines
};

SourceSnippet split_snippet(const std::string& text);

struct ParseError {
  int line;  // 1-based source line
  std::string message;
};

struct ParseResult {
  std::vector<Instruction> instructions;
  std::optional<ParseError> error;

  bool ok() const { return !error.has_value(); }
};

// Intel-syntax front end. Deterministic and total: any input yields either
// instructions or a ParseError naming the line and cause.
ParseResult parse_snippet(const std::string& text);

}  // namespace asmeval
