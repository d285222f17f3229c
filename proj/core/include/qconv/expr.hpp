#ifndef QCONV_EXPR_HPP
#define QCONV_EXPR_HPP

#include <memory>
#include <string>

#include <qconv/generators.hpp>
#include <qconv/series.hpp>

namespace qconv::ident {

// AST for series expressions: rational literals, named series, ring
// operations, integer powers, and the unary operators D (theta
// derivative), dilate_k, alt, even, odd.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { literal, name, add, sub, mul, pow, deriv, dilate, alt, even, odd };
    Kind kind;
    Rat literal;          // Kind::literal
    gen::SeriesName name; // Kind::name
    ExprPtr a, b;         // operands
    unsigned arg = 0;     // exponent (pow) or dilation factor (dilate)
};

ExprPtr lit(Rat v);
ExprPtr lit(long long v);
ExprPtr atom(gen::SeriesName name);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr pow(ExprPtr a, unsigned e);
ExprPtr deriv(ExprPtr a);
ExprPtr dilate(ExprPtr a, unsigned k);
ExprPtr alt(ExprPtr a);
ExprPtr even(ExprPtr a);
ExprPtr odd(ExprPtr a);

// expr == num / den exactly to the truncation order; den is positive,
// the LCM (up to products) of literal denominators encountered.
struct RatSeries {
    Series num;
    Int den{1};

    Rat coeff(std::size_t n) const { return Rat(num[n], den); }
};

RatSeries evaluate(const ExprPtr& expr, std::size_t order);

// Parenthesized round-trippable text form in the identity DSL grammar.
std::string to_string(const ExprPtr& expr);

bool equal(const ExprPtr& a, const ExprPtr& b);

}  // namespace qconv::ident

#endif
