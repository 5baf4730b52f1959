#include "modray/parse.hpp"

#include <cctype>
#include <sstream>

namespace modray {
namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i, s); }

    uint64_t number() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected a decimal number");
        uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<uint64_t>(s[i] - '0');
            if (v > (1ull << 40)) fail("number too large");
            ++i;
        }
        return v;
    }
};

// Polynomial in t over F_p, reduced into the field (value as element code).
uint32_t parse_tpoly(const Field& f, Cursor& c) {
    // Accumulate digit vector then reduce: exponents must stay below n.
    std::vector<uint32_t> digits(f.extension_degree(), 0);
    bool first = true;
    for (;;) {
        c.skip_ws();
        uint32_t sign = 1;  // 1 = plus, anything else handled via neg below
        if (!first) {
            if (c.eat('+')) {
                sign = 1;
            } else if (c.eat('-')) {
                sign = 0;
            } else {
                break;
            }
        } else if (c.eat('-')) {
            sign = 0;
        }
        first = false;
        uint64_t coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = c.number();
            have_coeff = true;
        }
        uint64_t exp = 0;
        c.skip_ws();
        if (c.peek() == '*' ) {
            c.eat('*');
            c.skip_ws();
        }
        if (c.peek() == 't') {
            c.eat('t');
            exp = 1;
            if (c.eat('^')) exp = c.number();
        } else if (!have_coeff) {
            c.fail("expected coefficient or 't'");
        }
        if (exp >= f.extension_degree())
            c.fail("t-exponent must be below the extension degree");
        uint32_t v = f.from_int(coeff);
        if (sign == 0) v = (v == 0) ? 0 : f.p() - v;
        digits[exp] = (digits[exp] + v) % f.p();
    }
    return f.from_digits(digits);
}

uint32_t parse_coeff(const Field& f, Cursor& c) {
    if (c.eat('[')) {
        if (f.extension_degree() == 1) c.fail("bracketed coefficients need an extension field");
        uint32_t v = parse_tpoly(f, c);
        if (!c.eat(']')) c.fail("expected ']'");
        return v;
    }
    return f.from_int(c.number());
}

}  // namespace

Poly parse_poly(const Field& f, const std::string& text) {
    Cursor c{text};
    std::vector<uint32_t> coeffs;
    auto accumulate = [&](uint32_t v, uint64_t exp) {
        if (exp > 4096) c.fail("X-exponent too large");
        if (coeffs.size() <= exp) coeffs.resize(exp + 1, 0);
        coeffs[exp] = f.add(coeffs[exp], v);
    };
    bool first = true;
    while (!c.done()) {
        bool negate = false;
        if (!first) {
            if (c.eat('+')) {
            } else if (c.eat('-')) {
                negate = true;
            } else {
                c.fail("expected '+' or '-'");
            }
        } else if (c.eat('-')) {
            negate = true;
        }
        first = false;
        char p = c.peek();
        uint32_t v = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(p)) || p == '[') {
            v = parse_coeff(f, c);
            have_coeff = true;
        }
        uint64_t exp = 0;
        c.skip_ws();
        if (c.peek() == '*') {
            c.eat('*');
            c.skip_ws();
        }
        if (c.peek() == 'X' || c.peek() == 'x') {
            ++c.i;
            exp = 1;
            if (c.eat('^')) exp = c.number();
        } else if (!have_coeff) {
            c.fail("expected a coefficient or 'X'");
        }
        if (negate) v = f.neg(v);
        accumulate(v, exp);
    }
    if (first) throw ParseError("empty polynomial", 0, text);
    return Poly(f, std::move(coeffs));
}

std::vector<uint32_t> parse_modulus(uint32_t p, uint32_t n, const std::string& text) {
    // Grammar as for polynomials but in the generator t; must have degree n.
    Cursor c{text};
    std::vector<uint32_t> coeffs(n + 1, 0);
    bool first = true;
    while (!c.done()) {
        bool negate = false;
        if (!first) {
            if (c.eat('+')) {
            } else if (c.eat('-')) {
                negate = true;
            } else {
                c.fail("expected '+' or '-'");
            }
        } else if (c.eat('-')) {
            negate = true;
        }
        first = false;
        uint64_t v = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            v = c.number();
            have_coeff = true;
        }
        uint64_t exp = 0;
        c.skip_ws();
        if (c.peek() == '*') {
            c.eat('*');
            c.skip_ws();
        }
        if (c.peek() == 't') {
            ++c.i;
            exp = 1;
            if (c.eat('^')) exp = c.number();
        } else if (!have_coeff) {
            c.fail("expected a coefficient or 't'");
        }
        if (exp > n) c.fail("modulus degree exceeds the extension degree");
        uint32_t r = static_cast<uint32_t>(v % p);
        if (negate) r = r == 0 ? 0 : p - r;
        coeffs[exp] = (coeffs[exp] + r) % p;
    }
    if (first) throw ParseError("empty modulus", 0, text);
    return coeffs;
}

FieldElement parse_element(const Field& f, const std::string& text) {
    Cursor c{text};
    uint32_t v = parse_coeff(f, c);
    if (!c.done()) c.fail("trailing characters after element");
    return FieldElement(f, v);
}

std::string element_to_string(const Field& f, uint32_t code) {
    if (f.extension_degree() == 1 || code < f.p()) return std::to_string(code);
    std::ostringstream out;
    out << '[';
    auto d = f.digits(code);
    bool first = true;
    for (size_t k = d.size(); k-- > 0;) {
        if (d[k] == 0) continue;
        if (!first) out << '+';
        first = false;
        if (k == 0) {
            out << d[k];
        } else {
            if (d[k] != 1) out << d[k] << '*';
            out << 't';
            if (k > 1) out << '^' << k;
        }
    }
    out << ']';
    return out.str();
}

std::string element_to_string(const FieldElement& e) {
    return element_to_string(e.field(), e.code());
}

std::string monomial_to_string(const Field& f, uint32_t coeff_code, int exponent) {
    std::string c = element_to_string(f, coeff_code);
    if (exponent == 0) return c;
    std::string xs = exponent == 1 ? "X" : "X^" + std::to_string(exponent);
    if (coeff_code == 1) return xs;
    return c + "*" + xs;
}

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        uint32_t c = p.coeff(k);
        if (c == 0) continue;
        if (!first) out << " + ";
        first = false;
        out << monomial_to_string(p.field(), c, k);
    }
    return out.str();
}

std::string series_to_string(const LaurentSeries& s) {
    if (s.is_exact_zero()) return "0";
    if (s.is_zero_to_prec()) return "0 + O(X^-" + std::to_string(s.prec() + 1) + ")";
    std::ostringstream out;
    bool first = true;
    for (int i = s.val(); i <= s.prec(); ++i) {
        uint32_t c = s.coeff(i);
        if (c == 0) continue;
        if (!first) out << " + ";
        first = false;
        out << monomial_to_string(s.field(), c, -i);
    }
    if (first) out << "0";
    if (!s.exact()) out << " + O(X^-" << s.prec() + 1 << ")";
    return out.str();
}

}  // namespace modray
