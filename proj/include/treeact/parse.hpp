#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "treeact/birat.hpp"

namespace treeact {

/// Recursive-descent parser for field expressions in x and y.
/// Grammar: expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
/// factor := base ('^' int)?; base := int | 'x' | 'y' | '(' expr ')';
/// unary minus allowed; whitespace insignificant; integers reduced mod p.
class ExprParser {
public:
    ExprParser(PrimeField f, std::string text) : field_(f), s_(std::move(text)) {}

    BiRat parse() {
        BiRat v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
        return v;
    }

private:
    BiRat expr() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
            skip_ws();
        }
        BiRat v = term();
        if (neg) v = -v;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+') {
                ++pos_;
                v = v + term();
            } else if (c == '-') {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }

    BiRat term() {
        BiRat v = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                v = v * factor();
            } else if (c == '/') {
                ++pos_;
                BiRat d = factor();
                if (d.is_zero()) throw DivisionByZero("division by a zero expression");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    BiRat factor() {
        BiRat b = base();
        skip_ws();
        if (peek() == '^') {
            std::size_t at = ++pos_;
            long long e = integer();
            if (e < 0 && b.is_zero()) throw ParseError("division by zero expression", at);
            BiRat r = BiRat::one(field_);
            BiRat m = e >= 0 ? b : b.inv();
            for (long long i = 0; i < (e >= 0 ? e : -e); ++i) r = r * m;
            return r;
        }
        return b;
    }

    BiRat base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            BiRat v = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (c == 'x') {
            ++pos_;
            return BiRat(RatFunc::x(field_));
        }
        if (c == 'y') {
            ++pos_;
            return BiRat::y(field_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = integer();
            return BiRat(RatFunc::constant(field_, v));
        }
        throw ParseError("expected expression", pos_);
    }

    long long integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-' || peek() == '+') neg = get() == '-';
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer", pos_);
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > (1LL << 40)) throw ParseError("integer literal too large", pos_);
        }
        return neg ? -v : v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }

    PrimeField field_;
    std::string s_;
    std::size_t pos_ = 0;
};

inline BiRat parse_birat(PrimeField f, const std::string& text) {
    return ExprParser(f, text).parse();
}

inline RatFunc parse_ratfunc(PrimeField f, const std::string& text) {
    BiRat v = parse_birat(f, text);
    if (!v.is_yfree()) throw ParseError("expected a y-free expression", 0);
    return v.as_ratfunc();
}

// ---- Formatting. Output reparses to an equal value. ----

inline std::string format(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        std::uint64_t c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "x";
            if (i != 1) os << "^" << i;
        }
    }
    return os.str();
}

inline std::string format(const RatFunc& r) {
    if (r.den().is_one()) return format(r.num());
    return "(" + format(r.num()) + ")/(" + format(r.den()) + ")";
}

inline std::string format(const YLaurent& l) {
    if (l.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : l.terms()) {
        if (!first) os << "+";
        first = false;
        os << "(" << format(c) << ")";
        if (e != 0) {
            os << "*y";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

inline std::string format(const BiRat& b) {
    if (b.den() == YLaurent::one(b.field())) return format(b.num());
    return "(" + format(b.num()) + ")/(" + format(b.den()) + ")";
}

}  // namespace treeact
