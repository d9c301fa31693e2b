#ifndef PREFCALC_PARSER_HPP
#define PREFCALC_PARSER_HPP

#include <string>
#include <string_view>

#include "prefcalc/errors.hpp"
#include "prefcalc/expr.hpp"

namespace prefcalc {

// Position-aware description of a syntax error.
struct ParseDiagnostic {
    std::size_t offset = 0;  // byte offset into the input
    std::size_t line = 1;
    std::size_t column = 1;  // byte column, 1-based
    std::string message;
    std::string token;       // offending token text, empty at end of input
};

class ParseError : public Error {
public:
    explicit ParseError(ParseDiagnostic d);
    const ParseDiagnostic& diagnostic() const { return diagnostic_; }

private:
    ParseDiagnostic diagnostic_;
};

// Concrete syntax for preference expressions:
//
//   expr    := disj
//   disj    := conj { "|" conj }
//   conj    := unary { "." unary }
//   unary   := "~" unary | primary
//   primary := atom | "(" expr ")" | "TOP" | "BOT"
//   atom    := IDENT "=" NUMBER
//
// "~" binds tightest, then ".", then "|"; whitespace is insignificant.
// NUMBER is a decimal real (optional sign, fraction, exponent).  The
// operator aliases "∨" for "|" and "·" for "." are accepted.
ExprPtr parse(std::string_view text);

// Minimal-parentheses rendering; levels are printed with just enough digits
// to round-trip exactly, so parse(format(e)) is canonical_equal to e.
std::string format(const ExprPtr& e);

// Shortest decimal form of a double that parses back to the same value.
std::string format_level(double value);

// `value` rendered with the given number of significant digits (CLI and CSV
// output use 12).
std::string format_number(double value, int significant_digits);

}  // namespace prefcalc

#endif  // PREFCALC_PARSER_HPP
