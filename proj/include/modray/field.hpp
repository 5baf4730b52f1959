#pragma once

#include <cstdint>
#include <vector>

#include "modray/errors.hpp"

namespace modray {

/// The finite field k = F_q with q = p^n, p prime.
///
/// Elements are encoded as integers in [0, q): the base-p digits of the code
/// are the coordinates in the power basis 1, t, ..., t^(n-1) of F_p[t]/(m(t)),
/// where m is the (monic, irreducible) modulus.  For prime fields the code is
/// just the residue.  Multiplication is schoolbook product mod m; fields with
/// q <= 256 get full multiplication/inverse tables at construction.
class Field {
public:
    static Field prime(uint32_t p);
    /// modulus: little-endian coefficients in t, degree n, monic.
    /// Irreducibility is checked by trial division against every monic
    /// polynomial of degree <= n/2 over F_p.
    static Field extension(uint32_t p, uint32_t n, const std::vector<uint32_t>& modulus);
    /// Deterministic search for the smallest irreducible monic modulus of
    /// degree n over F_p (by the code of its coefficient vector).
    static std::vector<uint32_t> find_modulus(uint32_t p, uint32_t n);

    uint32_t p() const { return p_; }
    uint32_t extension_degree() const { return n_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return mod_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (n_ == 1) {
            uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return add_ext(a, b);
    }
    uint32_t neg(uint32_t a) const {
        if (n_ == 1) return a ? p_ - a : 0;
        return neg_ext(a);
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return tables_ ? mul_table_[a * q_ + b] : mul_slow(a, b);
    }
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    /// Embedding of the prime subfield: v mod p.
    uint32_t from_int(uint64_t v) const { return static_cast<uint32_t>(v % p_); }
    /// Base-p digits of a code = coordinates in the power basis of t.
    std::vector<uint32_t> digits(uint32_t code) const;
    uint32_t from_digits(const std::vector<uint32_t>& d) const;

    /// Structural identity (p, n, modulus); distinct Field objects with the
    /// same parameters are interchangeable.
    bool operator==(const Field& o) const { return key_ == o.key_ && mod_ == o.mod_; }
    bool operator!=(const Field& o) const { return !(*this == o); }
    uint64_t key() const { return key_; }

private:
    Field(uint32_t p, uint32_t n, std::vector<uint32_t> modulus);
    uint32_t add_ext(uint32_t a, uint32_t b) const;
    uint32_t neg_ext(uint32_t a) const;
    uint32_t mul_slow(uint32_t a, uint32_t b) const;
    uint32_t inv_slow(uint32_t a) const;
    void build_tables();

    uint32_t p_ = 0, n_ = 1, q_ = 0;
    std::vector<uint32_t> mod_;  // little-endian, size n+1, monic; empty for n = 1
    uint64_t key_ = 0;
    bool tables_ = false;
    std::vector<uint16_t> mul_table_;
    std::vector<uint16_t> inv_table_;
};

/// A value of k bound to its field.  Immutable; fields must outlive elements.
class FieldElement {
public:
    FieldElement(const Field& f, uint32_t code) : f_(&f), v_(code) {}
    static FieldElement zero(const Field& f) { return {f, 0}; }
    static FieldElement one(const Field& f) { return {f, 1}; }

    const Field& field() const { return *f_; }
    uint32_t code() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    FieldElement operator+(const FieldElement& o) const { return with(f_->add(v_, o.v_)); }
    FieldElement operator-(const FieldElement& o) const { return with(f_->sub(v_, o.v_)); }
    FieldElement operator*(const FieldElement& o) const { return with(f_->mul(v_, o.v_)); }
    FieldElement operator/(const FieldElement& o) const { return with(f_->div(v_, o.v_)); }
    FieldElement operator-() const { return with(f_->neg(v_)); }
    FieldElement inverse() const { return with(f_->inv(v_)); }
    bool operator==(const FieldElement& o) const { return v_ == o.v_ && *f_ == *o.f_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    FieldElement with(uint32_t code) const { return {*f_, code}; }
    const Field* f_;
    uint32_t v_;
};

}  // namespace modray
