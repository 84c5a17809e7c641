#pragma once

#include "afx/poly.hpp"

#include <stdexcept>
#include <string>

namespace afx {

struct ParseError : std::runtime_error {
    size_t pos;  // 0-based offset into the input text
    ParseError(size_t p, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := rational | var | '(' expr ')'
// Implicit multiplication is not accepted. Whitespace is insignificant.
Poly parse(const std::string& text, const std::string& varset = kVarUniverse);

}  // namespace afx
