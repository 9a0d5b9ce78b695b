#pragma once

#include "asmeval/expr.hpp"

namespace asmeval {

// Canonicalization: constant folding, identity/annihilator rules,
// commutative-operand ordering, extract/concat fusion. Idempotent.
ExprRef normalize(const ExprRef& e);

}  // namespace asmeval
