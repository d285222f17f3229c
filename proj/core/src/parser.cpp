#include <qconv/parser.hpp>

#include <cctype>
#include <sstream>

namespace qconv::ident {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    enum class Kind { ident, string, number, punct, end };
    Kind kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_ws();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_.kind = Token::Kind::end;
            tok_.text.clear();
            return;
        }
        const char c = s_[pos_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
                bump();
            tok_.kind = Token::Kind::ident;
            tok_.text = s_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit((unsigned char)c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) bump();
            tok_.kind = Token::Kind::number;
            tok_.text = s_.substr(start, pos_ - start);
            return;
        }
        if (c == '"') {
            bump();
            std::size_t start = pos_;
            while (pos_ < s_.size() && s_[pos_] != '"' && s_[pos_] != '\n') bump();
            if (pos_ >= s_.size() || s_[pos_] != '"')
                throw ParseError(tok_.line, tok_.col, "unterminated string literal");
            tok_.kind = Token::Kind::string;
            tok_.text = s_.substr(start, pos_ - start);
            bump();
            return;
        }
        if (c == '=' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '=') {
            tok_.kind = Token::Kind::punct;
            tok_.text = "==";
            bump();
            bump();
            return;
        }
        static const std::string punct = "+-*/^():;,";
        if (punct.find(c) != std::string::npos) {
            tok_.kind = Token::Kind::punct;
            tok_.text = std::string(1, c);
            bump();
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size()) {
            const char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    std::vector<IdentityRecord> parse_file() {
        std::vector<IdentityRecord> out;
        while (lex_.peek().kind != Token::Kind::end) out.push_back(parse_statement());
        return out;
    }

    ExprPtr parse_single_expr() {
        ExprPtr e = parse_expr();
        expect_end();
        return e;
    }

private:
    IdentityRecord parse_statement() {
        expect_keyword("identity");
        Token name = expect(Token::Kind::string, "identity name string");
        IdentityRecord rec;
        rec.name = name.text;
        if (lex_.peek().kind == Token::Kind::ident && lex_.peek().text == "expect") {
            lex_.take();
            Token mode = expect(Token::Kind::ident, "'pass' or 'audit'");
            if (mode.text == "pass")
                rec.expect = Expect::pass;
            else if (mode.text == "audit")
                rec.expect = Expect::audit;
            else
                throw ParseError(mode.line, mode.col, "expected 'pass' or 'audit'");
        }
        expect_punct(":");
        rec.lhs = parse_expr();
        expect_punct("==");
        rec.rhs = parse_expr();
        expect_punct(";");
        return rec;
    }

    ExprPtr parse_expr() {
        bool neg = false;
        if (is_punct("-")) {
            lex_.take();
            neg = true;
        }
        ExprPtr e = parse_term();
        if (neg) e = sub(lit(0), e);
        while (is_punct("+") || is_punct("-")) {
            const bool minus = lex_.take().text == "-";
            ExprPtr rhs = parse_term();
            e = minus ? sub(e, rhs) : add(e, rhs);
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (is_punct("*")) {
            lex_.take();
            e = mul(e, parse_factor());
        }
        return e;
    }

    ExprPtr parse_factor() {
        ExprPtr e = parse_base();
        if (is_punct("^")) {
            lex_.take();
            Token n = expect(Token::Kind::number, "nonnegative integer exponent");
            e = pow(e, parse_nat(n));
        }
        return e;
    }

    ExprPtr parse_base() {
        const Token t = lex_.peek();
        if (t.kind == Token::Kind::number) {
            lex_.take();
            Int num(t.text);
            Int den{1};
            if (is_punct("/")) {
                lex_.take();
                Token d = expect(Token::Kind::number, "positive denominator");
                den = Int(d.text);
                if (den == 0) throw ParseError(d.line, d.col, "zero denominator");
            }
            return lit(Rat(num, den));
        }
        if (t.kind == Token::Kind::punct && t.text == "(") {
            lex_.take();
            ExprPtr e = parse_expr();
            expect_punct(")");
            return e;
        }
        if (t.kind == Token::Kind::ident) {
            lex_.take();
            if (t.text == "D" || t.text == "dilate" || t.text == "alt" || t.text == "even" ||
                t.text == "odd") {
                expect_punct("(");
                ExprPtr inner = parse_expr();
                unsigned arg = 0;
                if (is_punct(",")) {
                    lex_.take();
                    Token n = expect(Token::Kind::number, "integer argument");
                    arg = parse_nat(n);
                    if (arg < 1) throw ParseError(n.line, n.col, "dilation factor must be >= 1");
                }
                expect_punct(")");
                if (t.text == "D") return deriv(inner);
                if (t.text == "alt") return alt(inner);
                if (t.text == "even") return even(inner);
                if (t.text == "odd") return odd(inner);
                if (arg == 0)
                    throw ParseError(t.line, t.col, "dilate requires a factor argument");
                return dilate(inner, arg);
            }
            gen::SeriesName name;
            if (!gen::lookup_name(t.text, name))
                throw ParseError(t.line, t.col, "unknown series name '" + t.text + "'");
            return atom(name);
        }
        throw ParseError(t.line, t.col, "expected a literal, series name, or '('");
    }

    unsigned parse_nat(const Token& t) {
        try {
            return unsigned(std::stoul(t.text));
        } catch (const std::exception&) {
            throw ParseError(t.line, t.col, "integer out of range");
        }
    }

    bool is_punct(const char* p) const {
        return lex_.peek().kind == Token::Kind::punct && lex_.peek().text == p;
    }

    Token expect(Token::Kind kind, const char* what) {
        const Token t = lex_.peek();
        if (t.kind != kind)
            throw ParseError(t.line, t.col, std::string("expected ") + what);
        return lex_.take();
    }

    void expect_punct(const char* p) {
        const Token t = lex_.peek();
        if (t.kind != Token::Kind::punct || t.text != p)
            throw ParseError(t.line, t.col, std::string("expected '") + p + "'");
        lex_.take();
    }

    void expect_keyword(const char* kw) {
        const Token t = lex_.peek();
        if (t.kind != Token::Kind::ident || t.text != kw)
            throw ParseError(t.line, t.col, std::string("expected '") + kw + "'");
        lex_.take();
    }

    void expect_end() {
        const Token t = lex_.peek();
        if (t.kind != Token::Kind::end)
            throw ParseError(t.line, t.col, "trailing input after expression");
    }

    Lexer lex_;
};

}  // namespace

std::vector<IdentityRecord> parse(const std::string& text) {
    return Parser(text).parse_file();
}

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse_single_expr(); }

}  // namespace qconv::ident
