#ifndef QCONV_PARSER_HPP
#define QCONV_PARSER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <qconv/identity.hpp>

namespace qconv::ident {

// Positioned diagnostic for the identity DSL (1-based line/column).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

// Identity DSL:
//   statement := "identity" STRING [ "expect" ("pass"|"audit") ] ":" expr "==" expr ";"
//   expr      := term { ("+"|"-") term }
//   term      := factor { "*" factor }
//   factor    := base [ "^" NAT ]
//   base      := RATIONAL | NAME | "(" expr ")" | FUNC "(" expr [ "," NAT ] ")"
//   FUNC      := "D" | "dilate" | "alt" | "even" | "odd"
// Comments run from '#' to end of line.  NAME covers the grammar's nine
// series plus the extended atoms (q, parity series, wt5, mu, nu).
std::vector<IdentityRecord> parse(const std::string& text);

// A single expression, for --target/--basis style CLI input.
ExprPtr parse_expr(const std::string& text);

}  // namespace qconv::ident

#endif
