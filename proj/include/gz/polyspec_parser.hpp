#pragma once

// Textual PolySpec grammar:
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := base ('^' uint)?
//   base    := var | complexlit | '(' expr ')'
//   var     := 'u0' .. 'u<m>' | 'v0' | 'vn' | 'vl'
//   complex := decimal ['i'] | 'i'
//
// Whitespace (including newlines) is insignificant. Errors throw ParseError
// carrying a 1-based line and column.

#include "gz/decomp.hpp"

#include <string_view>

namespace gz {

PolySpec parse_polyspec(std::string_view text, const VarSpec& spec, BitCount bits = WorkingPrecision::current());

}  // namespace gz
