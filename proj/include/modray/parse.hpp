#pragma once

#include <string>

#include "modray/laurent.hpp"
#include "modray/poly.hpp"

namespace modray {

/// Polynomial text grammar: terms `c*X^k` joined by `+` or `-`, where `c` is
/// a decimal residue or, for extension fields, a bracketed polynomial in the
/// generator `t` (e.g. "[t+1]*X^2 + [t]*X + 1").  Whitespace insignificant,
/// "X^1" may be written "X", a missing coefficient means 1.  Throws
/// ParseError with the offending position.
Poly parse_poly(const Field& f, const std::string& text);

/// Single field element: decimal residue or bracketed t-polynomial.
FieldElement parse_element(const Field& f, const std::string& text);

/// Modulus polynomial in the generator t over F_p ("t^2+t+1"); little-endian
/// coefficients, length n+1.
std::vector<uint32_t> parse_modulus(uint32_t p, uint32_t n, const std::string& text);

std::string poly_to_string(const Poly& p);
std::string element_to_string(const FieldElement& e);
std::string element_to_string(const Field& f, uint32_t code);

/// One rendered monomial c*X^k (k may be negative; used for series output).
std::string monomial_to_string(const Field& f, uint32_t coeff_code, int exponent);

/// Series rendering in the polynomial grammar with negative exponents,
/// e.g. "X^2 + 1 + 2*X^-1 + X^-3".
std::string series_to_string(const LaurentSeries& s);

}  // namespace modray
