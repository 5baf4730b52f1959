#include "modray/rational.hpp"

namespace modray {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one(den_.field());
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    uint32_t lead_inv = den_.field().inv(den_.leading());
    num_ = num_ * lead_inv;
    den_ = den_ * lead_inv;
}

int RationalFunction::valuation() const {
    if (is_zero()) throw DivisionByZero("valuation of zero");
    return den_.degree() - num_.degree();
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    return *this * o.inverse();
}

RationalFunction RationalFunction::fractional_part() const {
    return RationalFunction(Poly::divmod(num_, den_).second, den_);
}

std::vector<Poly> euclid_cf(const RationalFunction& f) {
    std::vector<Poly> terms;
    Poly a = f.num(), b = f.den();
    // Quotient degrees past the first are deg(previous divisor) - deg(remainder) >= 1,
    // so every a_i with i >= 1 automatically lies in A - k.
    while (!b.is_zero()) {
        auto [q, r] = Poly::divmod(a, b);
        terms.push_back(std::move(q));
        a = std::move(b);
        b = std::move(r);
    }
    return terms;
}

RationalFunction cf_value(const std::vector<Poly>& terms) {
    if (terms.empty()) throw DomainError("empty continued fraction");
    RationalFunction r = RationalFunction::from_poly(terms.back());
    for (size_t i = terms.size() - 1; i-- > 0;)
        r = RationalFunction::from_poly(terms[i]) + r.inverse();
    return r;
}

}  // namespace modray
