#include <cctype>
#include <cstddef>
#include <string>

#include "d21a/scalar.hpp"

namespace d21a {

namespace {

std::string coeff_str(const GaussianRational& c, bool leading_term) {
    // Renders a coefficient in front of a power of a. Mixed re/im coefficients
    // are parenthesized so the output stays parseable.
    std::string s = c.str();
    bool mixed = !c.is_real() && c.re() != 0;
    if (mixed) s = "(" + s + ")";
    if (!leading_term && s[0] != '-') s = "+" + s;
    return s;
}

std::string poly_str(const APoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        GaussianRational c = p.coeff(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        bool first = out.empty();
        std::string var;
        if (k == 1)
            var = "a";
        else if (k > 1)
            var = "a^" + std::to_string(k);
        if (var.empty()) {
            out += coeff_str(c, first);
        } else if (c.is_one()) {
            out += first ? var : "+" + var;
        } else if (c == GaussianRational(-1)) {
            out += "-" + var;
        } else {
            out += coeff_str(c, first) + "*" + var;
        }
    }
    return out;
}

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Scalar parse_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Scalar acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    Scalar parse_term() {
        Scalar acc = parse_pow();
        for (;;) {
            if (eat('*'))
                acc = acc * parse_pow();
            else if (eat('/'))
                acc = acc / parse_pow();
            else
                break;
        }
        return acc;
    }

    Scalar parse_pow() {
        Scalar base = parse_atom();
        if (eat('^')) {
            unsigned e = parse_nat();
            base = base.pow(e);
        }
        return base;
    }

    unsigned parse_nat() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw parse_error("expected exponent at offset " + std::to_string(start));
        return static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
    }

    Scalar parse_atom() {
        skip_ws();
        if (pos >= text.size()) throw parse_error("unexpected end of scalar expression");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Scalar inner = parse_expr();
            if (!eat(')')) throw parse_error("missing ')' in scalar expression");
            return inner;
        }
        if (c == 'i') {
            ++pos;
            return Scalar::i();
        }
        if (c == 'a') {
            ++pos;
            return Scalar::param();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            return Scalar(Rat(text.substr(start, pos - start)));
        }
        throw parse_error(std::string("unexpected character '") + c + "' in scalar expression");
    }
};

} // namespace

std::string Scalar::str() const {
    std::string n = poly_str(num_);
    if (den_ == APoly(GaussianRational(1))) return n;
    return "(" + n + ")/(" + poly_str(den_) + ")";
}

Scalar parse_scalar(const std::string& text) {
    Parser p(text);
    Scalar s = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw parse_error("trailing characters in scalar '" + text + "' at offset " + std::to_string(p.pos));
    return s;
}

} // namespace d21a
