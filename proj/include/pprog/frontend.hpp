#ifndef PPROG_FRONTEND_HPP
#define PPROG_FRONTEND_HPP

#include "pprog/ast.hpp"

#include <string>

namespace pprog {

/// Parses P-program source text into an AST. Throws Error(SyntaxError) with
/// location and expected-token set on malformed input. `#` starts a comment
/// running to end of line; decimal literals become exact rationals.
Program parse(const std::string& source);

/// Enforces the static rules: scope-local declarations, distinct joints,
/// biases in [0,1], unique context/component names, directive resolution and
/// component coverage. Returns the program plus resolved metadata.
ValidatedProgram validate(const Program& program);

/// Pretty-prints a program in the concrete syntax; parse(print(p)) is
/// structurally equal to p.
std::string print_program(const Program& program);

}  // namespace pprog

#endif
