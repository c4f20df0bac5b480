// Text format for presentations.
//
//   algebra NAME                (optional; the name runs to end of line)
//   vertices: NAME, ...         (optional, inferred from arrows if missing)
//   arrows: name:src->tgt, ...
//   relations: EXPR; EXPR; ...  (possibly empty)
//   field: Q|F2|F3|F4|F5|F7     (optional, default Q)
//
// EXPR   := ["-"] TERM (("+"|"-") TERM)*
// TERM   := [COEFF "*"] FACTOR ("*" FACTOR)*
// COEFF  := INT ["/" INT]
// FACTOR := NAME ["^" INT] | "(" EXPR ")" ["^" INT]
//
// '#' starts a line comment.  Newlines are ordinary whitespace.

#pragma once

#include "qga/presentation.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qga {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at line " + std::to_string(line_) +
                           ", column " + std::to_string(col_)),
        line(line_),
        col(col_) {}
};

Presentation parse_presentation(std::string_view text);

}  // namespace qga
