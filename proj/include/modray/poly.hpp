#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modray/field.hpp"

namespace modray {

/// A = k[X].  Coefficients little-endian (index = degree), normalized so the
/// leading coefficient is nonzero; the zero polynomial has an empty vector
/// and reports the dedicated sentinel degree kDegZero, never 0.
class Poly {
public:
    /// Sentinel for deg 0 ("minus infinity").  Large and negative so that
    /// comparisons against true degrees behave, but never do arithmetic on it.
    static constexpr int kDegZero = -(1 << 28);

    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<uint32_t> coeffs) : f_(&f), c_(std::move(coeffs)) {
        trim();
    }
    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return constant(f, 1); }
    static Poly constant(const Field& f, uint32_t code) {
        return Poly(f, std::vector<uint32_t>{code});
    }
    static Poly x(const Field& f) { return Poly(f, {0, 1}); }
    /// c * X^k
    static Poly monomial(const Field& f, uint32_t c, int k);

    const Field& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return c_.empty() ? kDegZero : static_cast<int>(c_.size()) - 1; }
    uint32_t coeff(int k) const {
        return (k < 0 || k >= static_cast<int>(c_.size())) ? 0 : c_[k];
    }
    uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint32_t>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(uint32_t scalar) const;
    bool operator==(const Poly& o) const { return c_ == o.c_ && *f_ == *o.f_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Long division: a = q*b + r with deg r < deg b.  Throws DivisionByZero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);

    Poly monic() const;
    Poly shifted(int k) const;  // * X^k, k >= 0

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const Field* f_;
    std::vector<uint32_t> c_;
};

/// Number of polynomials of degree exactly n over k: (q-1) * q^n, n >= 1.
uint64_t poly_count_of_degree(const Field& f, int n);

}  // namespace modray
