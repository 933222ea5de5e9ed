#include "bifurcata/parser.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "bifurcata/errors.hpp"

namespace bifurcata {
namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip_ws();
        std::size_t line = line_, col = col_;
        if (pos_ >= s_.size()) return {Tok::End, "", line, col};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                num += s_[pos_];
                advance();
            }
            return {Tok::Number, num, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                id += s_[pos_];
                advance();
            }
            return {Tok::Ident, id, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Tok::Plus, "+", line, col};
            case '-': return {Tok::Minus, "-", line, col};
            case '*': return {Tok::Star, "*", line, col};
            case '/': return {Tok::Slash, "/", line, col};
            case '^': return {Tok::Caret, "^", line, col};
            case '(': return {Tok::LParen, "(", line, col};
            case ')': return {Tok::RParen, ")", line, col};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
    void advance() {
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
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) { cur_ = lex_.next(); }

    Poly<Rat> parse() {
        Poly<Rat> p = expr();
        if (cur_.kind == Tok::Slash)
            throw err("'/' is only allowed inside a rational literal like 1/2");
        if (cur_.kind != Tok::End) throw err("unexpected trailing input");
        return p;
    }

private:
    Poly<Rat> expr() {
        Poly<Rat> acc = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool minus = cur_.kind == Tok::Minus;
            bump();
            acc = minus ? poly_sub(Q_, acc, term()) : poly_add(Q_, acc, term());
        }
        return acc;
    }

    Poly<Rat> term() {
        Poly<Rat> acc = factor();
        while (true) {
            if (cur_.kind == Tok::Star) {
                bump();
                acc = poly_mul(Q_, acc, factor());
            } else if (cur_.kind == Tok::Number || cur_.kind == Tok::Ident ||
                       cur_.kind == Tok::LParen) {
                throw err("missing operator; implicit multiplication is not supported, write a '*'");
            } else {
                break;
            }
        }
        return acc;
    }

    Poly<Rat> factor() {
        int sign = 1;
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            if (cur_.kind == Tok::Minus) sign = -sign;
            bump();
        }
        Poly<Rat> base = primary();
        if (cur_.kind == Tok::Caret) {
            bump();
            base = poly_pow(Q_, base, exponent_literal());
        }
        if (sign < 0) base = poly_neg(Q_, base);
        return base;
    }

    std::uint32_t exponent_literal() {
        if (cur_.kind == Tok::Minus)
            throw err("exponent must be a non-negative integer literal");
        if (cur_.kind != Tok::Number)
            throw err("exponent must be a non-negative integer literal");
        unsigned long long v = 0;
        for (char c : cur_.text) {
            v = v * 10 + static_cast<unsigned>(c - '0');
            if (v > 100000) throw err("exponent too large");
        }
        bump();
        return static_cast<std::uint32_t>(v);
    }

    Poly<Rat> primary() {
        switch (cur_.kind) {
            case Tok::Number: {
                std::string text = cur_.text;
                bump();
                if (cur_.kind == Tok::Slash) {
                    Token slash = cur_;
                    bump();
                    if (cur_.kind != Tok::Number)
                        throw ParseError("expected integer denominator after '/'", slash.line,
                                         slash.col);
                    bool all_zero = cur_.text.find_first_not_of('0') == std::string::npos;
                    if (all_zero)
                        throw ParseError("rational literal with zero denominator", slash.line,
                                         slash.col);
                    text += "/" + cur_.text;
                    bump();
                }
                return poly_const(Q_, vars_, Rat::from_string(text));
            }
            case Tok::Ident: {
                std::size_t idx;
                if (cur_.text == "x") {
                    idx = 0;
                } else if (cur_.text == "y") {
                    idx = 1;
                } else {
                    throw err("unknown identifier '" + cur_.text +
                              "': only two-variable polynomials in x and y are accepted");
                }
                bump();
                return poly_var(Q_, vars_, idx);
            }
            case Tok::LParen: {
                bump();
                Poly<Rat> inner = expr();
                if (cur_.kind != Tok::RParen) throw err("expected ')'");
                bump();
                return inner;
            }
            case Tok::Slash:
                throw err("'/' is only allowed inside a rational literal like 1/2");
            case Tok::End:
                throw err("unexpected end of input");
            default:
                throw err("expected a number, a variable or '('");
        }
    }

    ParseError err(const std::string& msg) { return ParseError(msg, cur_.line, cur_.col); }

    void bump() { cur_ = lex_.next(); }

    RatField Q_;
    std::vector<std::string> vars_{"x", "y"};
    Lexer lex_;
    Token cur_;
};

}  // namespace

Poly<Rat> parse_polynomial(const std::string& text) {
    Parser p(text);
    return p.parse();
}

}  // namespace bifurcata
