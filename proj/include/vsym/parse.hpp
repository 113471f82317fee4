#pragma once

#include <cctype>
#include <string>

#include "vsym/errors.hpp"
#include "vsym/polynomial.hpp"

namespace vsym {

// Recursive-descent parser for the polynomial grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := rational | ident | '(' expr ')'
// rational := nat ('/' nat)?
class PolyParser {
public:
    PolyParser(std::string text, VarListPtr vars)
        : text_(std::move(text)), vars_(std::move(vars)) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Polynomial t = term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            get();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            if (!std::isdigit(peek())) fail("expected exponent");
            return base.pow(static_cast<std::uint32_t>(natural()));
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            Polynomial p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            get();
            return p;
        }
        if (std::isdigit(c)) {
            Integer num = natural();
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                if (!std::isdigit(peek())) fail("expected denominator");
                Integer den = natural();
                if (den == 0) fail("zero denominator");
                return Polynomial::constant(vars_, Rational(num, den));
            }
            return Polynomial::constant(vars_, Rational(num));
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t start = pos_;
            std::string id;
            while (std::isalnum(peek()) || peek() == '_') id.push_back(get());
            for (std::size_t i = 0; i < vars_->size(); ++i)
                if ((*vars_)[i] == id) return Polynomial::variable(vars_, i);
            throw ParseError("undeclared variable '" + id + "'", start);
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
        return {};  // unreachable
    }

    Integer natural() {
        Integer v = 0;
        while (std::isdigit(peek())) v = v * 10 + (get() - '0');
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    std::string text_;
    VarListPtr vars_;
    std::size_t pos_ = 0;
};

inline Polynomial poly_parse(const std::string& text, VarListPtr vars) {
    return PolyParser(text, std::move(vars)).parse();
}

}  // namespace vsym
