#pragma once
#include <stdexcept>
#include <string>

#include "grmod/poly.hpp"

namespace grmod {

// Error with position info for polynomial and corpus text.  Columns are
// 1-based; line is 0 when the text is a bare expression.
struct ParseError : std::runtime_error {
    ParseError(std::string msg, int line_, int col_,
               std::string token_ = std::string())
        : std::runtime_error(format(msg, line_, col_, token_)), line(line_),
          col(col_), token(std::move(token_)) {}
    int line;
    int col;
    std::string token;

    static std::string format(const std::string& msg, int line, int col,
                              const std::string& token);
};

// Parses the expression syntax: identifiers, integer literals, + - * ^ and
// parentheses.  Multiplication is always explicit (x*y, x^2).  Unknown
// identifiers and mixed-context input raise ParseError.
Poly parse_poly(const ContextPtr& ctx, const std::string& text, int line = 0);

} // namespace grmod
