#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "leibniz/scalar.hpp"

namespace leibniz {

namespace detail {

// expr    := term (('+' | '-') term)*
// term    := unary (('*' | '/') unary)*
// unary   := ('-' | '+') unary | primary
// primary := integer | 'i' | identifier | '(' expr ')'
class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    Scalar parse() {
        Scalar s = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return s;
    }

private:
    Scalar expr() {
        Scalar acc = term();
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Scalar term() {
        Scalar acc = unary();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                acc *= unary();
            } else if (eat('/')) {
                std::size_t at = pos_;
                Scalar d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    Scalar unary() {
        skip_ws();
        if (eat('-'))
            return -unary();
        if (eat('+'))
            return unary();
        return primary();
    }

    Scalar primary() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar s = expr();
            skip_ws();
            if (!eat(')'))
                fail("expected ')'");
            return s;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return Scalar(QI(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start))))));
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size() && (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                                           std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "i")
                return Scalar(QI::i());
            return Scalar::param(name);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("scalar '" + std::string(text_) + "': " + what, 1, pos_ + 1);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the scalar grammar: rational literals, `i`, parameters `[a-z][a-z0-9_]*`,
/// `+ - * /` and parentheses.
inline Scalar parse_scalar(std::string_view text) { return detail::ScalarParser(text).parse(); }

} // namespace leibniz
