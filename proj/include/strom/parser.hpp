#pragma once

#include <string>

#include "strom/ast.hpp"

namespace strom {

/// Parses a whole .strom specification. Throws SyntaxError with position and
/// expected-token information.
Program parse(const std::string& source);

/// Parses a single expression (used for expression strings inside model
/// documents). The whole input must be consumed.
SExprPtr parse_expression(const std::string& source);

}  // namespace strom
