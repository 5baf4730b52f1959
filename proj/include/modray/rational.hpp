#pragma once

#include <vector>

#include "modray/poly.hpp"

namespace modray {

/// K = k(X) in canonical form: gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
    RationalFunction(Poly num, Poly den);
    static RationalFunction from_poly(const Poly& p) {
        return RationalFunction(p, Poly::one(p.field()));
    }
    static RationalFunction zero(const Field& f) {
        return RationalFunction(Poly::zero(f), Poly::one(f));
    }
    static RationalFunction one(const Field& f) {
        return RationalFunction(Poly::one(f), Poly::one(f));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Field& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    /// v_inf(P/Q) = deg Q - deg P.  Throws DivisionByZero on 0 (v = +inf).
    int valuation() const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction inverse() const;
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// Euclidean quotient of num by den; equals the integer part [P/Q].
    Poly integer_part() const { return Poly::divmod(num_, den_).first; }
    RationalFunction fractional_part() const;

private:
    Poly num_, den_;
};

/// Finite continued fraction of f: [a0; a1, ..., am] with deg a_i >= 1 for
/// i >= 1, obtained by iterated Euclidean division.  Re-evaluating the
/// expansion reproduces f exactly.
std::vector<Poly> euclid_cf(const RationalFunction& f);

/// Value of a0 + 1/(a1 + 1/(... + 1/am)).  Inverse of euclid_cf.
RationalFunction cf_value(const std::vector<Poly>& terms);

}  // namespace modray
