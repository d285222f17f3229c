#include <qconv/expr.hpp>

#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace qconv::ident {

namespace {

ExprPtr node(Expr e) { return std::make_shared<Expr>(std::move(e)); }

Int lcm(const Int& a, const Int& b) { return a / boost::multiprecision::gcd(a, b) * b; }

}  // namespace

ExprPtr lit(Rat v) {
    Expr e;
    e.kind = Expr::Kind::literal;
    e.literal = std::move(v);
    return node(std::move(e));
}

ExprPtr lit(long long v) { return lit(Rat(v)); }

ExprPtr atom(gen::SeriesName name) {
    Expr e;
    e.kind = Expr::Kind::name;
    e.name = name;
    return node(std::move(e));
}

namespace {
ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
    Expr e;
    e.kind = k;
    e.a = std::move(a);
    e.b = std::move(b);
    return node(std::move(e));
}
ExprPtr unary(Expr::Kind k, ExprPtr a, unsigned arg = 0) {
    Expr e;
    e.kind = k;
    e.a = std::move(a);
    e.arg = arg;
    return node(std::move(e));
}
}  // namespace

ExprPtr add(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::add, std::move(a), std::move(b)); }
ExprPtr sub(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::sub, std::move(a), std::move(b)); }
ExprPtr mul(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::mul, std::move(a), std::move(b)); }
ExprPtr pow(ExprPtr a, unsigned e) { return unary(Expr::Kind::pow, std::move(a), e); }
ExprPtr deriv(ExprPtr a) { return unary(Expr::Kind::deriv, std::move(a)); }
ExprPtr dilate(ExprPtr a, unsigned k) { return unary(Expr::Kind::dilate, std::move(a), k); }
ExprPtr alt(ExprPtr a) { return unary(Expr::Kind::alt, std::move(a)); }
ExprPtr even(ExprPtr a) { return unary(Expr::Kind::even, std::move(a)); }
ExprPtr odd(ExprPtr a) { return unary(Expr::Kind::odd, std::move(a)); }

namespace {

RatSeries combine_add(RatSeries x, RatSeries y, bool negate) {
    const Int d = lcm(x.den, y.den);
    Series n = x.num * (d / x.den);
    Series m = y.num * (d / y.den);
    return {negate ? n - m : n + m, d};
}

}  // namespace

RatSeries evaluate(const ExprPtr& expr, std::size_t order) {
    if (!expr) throw std::invalid_argument("evaluate: null expression");
    switch (expr->kind) {
        case Expr::Kind::literal: {
            const Int num = boost::multiprecision::numerator(expr->literal);
            const Int den = boost::multiprecision::denominator(expr->literal);
            return {Series::constant(num, order), den};
        }
        case Expr::Kind::name:
            return {gen::build(expr->name, order), 1};
        case Expr::Kind::add:
            return combine_add(evaluate(expr->a, order), evaluate(expr->b, order), false);
        case Expr::Kind::sub:
            return combine_add(evaluate(expr->a, order), evaluate(expr->b, order), true);
        case Expr::Kind::mul: {
            RatSeries x = evaluate(expr->a, order);
            RatSeries y = evaluate(expr->b, order);
            return {x.num * y.num, x.den * y.den};
        }
        case Expr::Kind::pow: {
            RatSeries x = evaluate(expr->a, order);
            return {power(x.num, expr->arg), int_pow(x.den, expr->arg)};
        }
        case Expr::Kind::deriv: {
            RatSeries x = evaluate(expr->a, order);
            return {theta_derivative(x.num), x.den};
        }
        case Expr::Kind::dilate: {
            RatSeries x = evaluate(expr->a, order);
            return {qconv::dilate(x.num, expr->arg), x.den};
        }
        case Expr::Kind::alt: {
            RatSeries x = evaluate(expr->a, order);
            return {alternate(x.num), x.den};
        }
        case Expr::Kind::even: {
            RatSeries x = evaluate(expr->a, order);
            return {parity_part(x.num, 0), x.den};
        }
        case Expr::Kind::odd: {
            RatSeries x = evaluate(expr->a, order);
            return {parity_part(x.num, 1), x.den};
        }
    }
    throw std::logic_error("evaluate: bad AST node");
}

namespace {

void print(std::ostringstream& os, const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::literal: {
            const Int num = boost::multiprecision::numerator(e->literal);
            const Int den = boost::multiprecision::denominator(e->literal);
            os << num;
            if (den != 1) os << "/" << den;
            break;
        }
        case Expr::Kind::name:
            os << gen::name_str(e->name);
            break;
        case Expr::Kind::add:
        case Expr::Kind::sub:
            os << "(";
            print(os, e->a);
            os << (e->kind == Expr::Kind::add ? " + " : " - ");
            print(os, e->b);
            os << ")";
            break;
        case Expr::Kind::mul:
            os << "(";
            print(os, e->a);
            os << " * ";
            print(os, e->b);
            os << ")";
            break;
        case Expr::Kind::pow:
            os << "(";
            print(os, e->a);
            os << ")^" << e->arg;
            break;
        case Expr::Kind::deriv:
            os << "D(";
            print(os, e->a);
            os << ")";
            break;
        case Expr::Kind::dilate:
            os << "dilate(";
            print(os, e->a);
            os << ", " << e->arg << ")";
            break;
        case Expr::Kind::alt:
            os << "alt(";
            print(os, e->a);
            os << ")";
            break;
        case Expr::Kind::even:
            os << "even(";
            print(os, e->a);
            os << ")";
            break;
        case Expr::Kind::odd:
            os << "odd(";
            print(os, e->a);
            os << ")";
            break;
    }
}

}  // namespace

std::string to_string(const ExprPtr& expr) {
    std::ostringstream os;
    print(os, expr);
    return os.str();
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->arg != b->arg) return false;
    switch (a->kind) {
        case Expr::Kind::literal: return a->literal == b->literal;
        case Expr::Kind::name: return a->name == b->name;
        default: break;
    }
    if ((a->a != nullptr) != (b->a != nullptr)) return false;
    if ((a->b != nullptr) != (b->b != nullptr)) return false;
    if (a->a && !equal(a->a, b->a)) return false;
    if (a->b && !equal(a->b, b->b)) return false;
    return true;
}

}  // namespace qconv::ident
