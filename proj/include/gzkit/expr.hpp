#ifndef GZKIT_EXPR_HPP
#define GZKIT_EXPR_HPP

#include <string>

#include "gzkit/combinat.hpp"
#include "gzkit/exactalg.hpp"

namespace gzkit {

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := integer | 'x[' i ',' j ']' | 'z[' t ']' | '(' expr ')'
// Errors: ParseError with the byte offset; NameError for x[i,j] outside
// lambda when one is given; DivisionByZero for division by zero.
RationalFunction parse_expr(const std::string& text);
RationalFunction parse_expr(const std::string& text, const Composition& lambda);
Polynomial parse_polynomial(const std::string& text, const Composition& lambda);  // ValidationError if not polynomial

}  // namespace gzkit

#endif
