#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "abcframe/exactnum.hpp"

namespace abcframe::cli {

// Grammar (whitespace ignored):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := atom (('*'|'/') atom)*
//   atom   := INTEGER | 'pi' | 'sqrt' '(' INTEGER ')'
// A term holds at most one irrational atom and may only divide by integers.
ExactReal parse_number(std::string_view text, const ContextPtr& ctx);

// The context named by "rational", "pi" or "sqrt:D".
ContextPtr context_from_name(std::string_view name);

// The one irrational basis used across all expressions, or rational if none.
// Throws ContextMismatch when two different bases appear.
ContextPtr infer_context(const std::vector<std::string>& texts);

}  // namespace abcframe::cli
