#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "unij/laurent.hpp"

namespace unij {

/// Parser for the canonical polynomial text format: terms joined by +/-,
/// each term an optional decimal coefficient and '*'-separated variable
/// powers (`x^2*d^-1 - 3`). Whitespace is free.
class PolyParser {
public:
    PolyParser(std::string_view text, VarSetPtr vars) : s_(text), vars_(std::move(vars)) {}

    LaurentPoly parse() {
        LaurentPoly p(vars_);
        skip_ws();
        if (eof()) input_error("empty polynomial text");
        bool first = true;
        while (!eof()) {
            int sign = 1;
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                sign = (get() == '-') ? -1 : 1;
            } else if (!first) {
                input_error("expected '+' or '-' between terms");
            }
            skip_ws();
            auto [e, c] = parse_term();
            p.add_term(e, sign * c);
            first = false;
            skip_ws();
        }
        return p;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    BigInt parse_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) input_error("expected digit in polynomial");
        BigInt v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (get() - '0');
        return v;
    }

    int parse_int() {
        int sign = 1;
        if (peek() == '-') { sign = -1; get(); }
        else if (peek() == '+') { get(); }
        BigInt v = parse_uint();
        if (v > 1000000) input_error("exponent out of range");
        return sign * static_cast<int>(v);
    }

    std::string parse_name() {
        std::string n;
        if (!std::isalpha(static_cast<unsigned char>(peek()))) input_error("expected variable name");
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            n.push_back(get());
        return n;
    }

    std::pair<Exponents, BigInt> parse_term() {
        Exponents e(vars_->size(), 0);
        BigInt c = 1;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = parse_uint();
            any = true;
        }
        skip_ws();
        while (!eof()) {
            if (peek() == '*') { get(); skip_ws(); }
            if (!std::isalpha(static_cast<unsigned char>(peek()))) break;
            std::string name = parse_name();
            size_t idx = vars_->index_of(name);
            int p = 1;
            skip_ws();
            if (peek() == '^') {
                get();
                skip_ws();
                p = parse_int();
            }
            e[idx] += p;
            any = true;
            skip_ws();
            if (peek() != '*') break;
        }
        if (!any) input_error("malformed polynomial term");
        return {e, c};
    }

    std::string_view s_;
    size_t pos_ = 0;
    VarSetPtr vars_;
};

inline LaurentPoly parse_poly(std::string_view text, VarSetPtr vars) {
    return PolyParser(text, std::move(vars)).parse();
}

}  // namespace unij
