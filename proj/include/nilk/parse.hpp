#pragma once

// Recursive-descent parser for polynomial expressions such as
//   "(z^-1 - 1)*t^2"   "1 - (1 - sigma^2)*(x - 2x^2)"   "x + e + e*x^2"
//
// Grammar:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (('*' | '/' | <juxtaposition>) factor)*
//   factor := '-' factor | atom ['^' ['-'] integer]
//   atom   := integer | identifier | '(' expr ')'
// Identifiers are ring variables or the coefficient ring's symbol (i, sigma, e).
// Division and negative powers require a recognized unit.

#include <cctype>
#include <string>
#include <string_view>

#include "nilk/poly.hpp"

namespace nilk {

namespace detail {

template <Coefficient C>
class PolyParser {
public:
    PolyParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Poly<C> parse() {
        Poly<C> p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &why) const {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool starts_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            return false;
        char c = text_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    Poly<C> expr() {
        Poly<C> acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Poly<C> term() {
        Poly<C> acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                Poly<C> d = factor();
                auto inv = d.try_invert();
                if (!inv)
                    fail("division by non-unit " + d.to_string());
                acc = acc * *inv;
            } else if (starts_atom()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly<C> factor() {
        if (accept('-'))
            return -factor();
        Poly<C> base = atom();
        if (accept('^')) {
            bool neg = accept('-');
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            long long k = std::stoll(std::string(text_.substr(start, pos_ - start)));
            if (neg) {
                auto inv = base.try_invert();
                if (!inv)
                    fail("negative power of non-unit " + base.to_string());
                return inv->pow(k);
            }
            return base.pow(k);
        }
        return base;
    }

    Poly<C> atom() {
        skip_ws();
        if (accept('(')) {
            Poly<C> inner = expr();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            Integer v(std::string(text_.substr(start, pos_ - start)));
            return integer_constant(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            if (ring_->index_of(name))
                return Poly<C>::variable(ring_, name);
            if (auto sym = coeff_traits<C>::symbol(name))
                return Poly<C>::constant(ring_, *sym);
            pos_ = start;
            fail("unknown identifier '" + std::string(name) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    // Integers enter every coefficient ring through repeated doubling of one.
    Poly<C> integer_constant(const Integer &v) {
        using T = coeff_traits<C>;
        C result = T::zero();
        C addend = T::one();
        Integer rest = v;
        while (rest > 0) {
            if ((rest & 1) != 0)
                result = result + addend;
            addend = addend + addend;
            rest >>= 1;
        }
        return Poly<C>::constant(ring_, result);
    }

    std::string_view text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

} // namespace detail

template <Coefficient C>
Poly<C> parse_poly(std::string_view text, const RingPtr &ring) {
    return detail::PolyParser<C>(text, ring).parse();
}

} // namespace nilk
