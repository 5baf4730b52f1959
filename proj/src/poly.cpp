#include "modray/poly.hpp"

#include <algorithm>

namespace modray {

Poly Poly::monomial(const Field& f, uint32_t c, int k) {
    if (c == 0) return zero(f);
    std::vector<uint32_t> v(static_cast<size_t>(k) + 1, 0);
    v[static_cast<size_t>(k)] = c;
    return Poly(f, std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(*f_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->neg(c_[i]);
    return Poly(*f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero(*f_);
    std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Poly(*f_, std::move(r));
}

Poly Poly::operator*(uint32_t scalar) const {
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], scalar);
    return Poly(*f_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {zero(f), a};
    std::vector<uint32_t> rem = a.c_;
    std::vector<uint32_t> quo(rem.size() - b.c_.size() + 1, 0);
    uint32_t lead_inv = f.inv(b.leading());
    for (size_t top = rem.size(); top-- >= b.c_.size();) {
        if (rem[top] == 0) continue;
        uint32_t c = f.mul(rem[top], lead_inv);
        size_t shift = top - (b.c_.size() - 1);
        quo[shift] = c;
        for (size_t i = 0; i < b.c_.size(); ++i)
            rem[i + shift] = f.sub(rem[i + shift], f.mul(c, b.c_[i]));
    }
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    if (leading() == 1) return *this;
    return *this * f_->inv(leading());
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<uint32_t> r(c_.size() + static_cast<size_t>(k), 0);
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return Poly(*f_, std::move(r));
}

uint64_t poly_count_of_degree(const Field& f, int n) {
    if (n < 1) throw DomainError("poly_count_of_degree needs n >= 1");
    uint64_t r = f.q() - 1;
    for (int i = 0; i < n; ++i) {
        if (r > UINT64_MAX / f.q()) throw DomainError("poly_count_of_degree overflow");
        r *= f.q();
    }
    return r;
}

}  // namespace modray
