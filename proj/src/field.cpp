#include "modray/field.hpp"

#include <algorithm>

namespace modray {
namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense little-endian polynomials over F_p, used only for modulus validation
// and slow-path extension arithmetic (Poly proper needs a constructed Field).
using PVec = std::vector<uint32_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
    ptrim(r);
    return r;
}

// Remainder of a mod b, b monic-leading (any nonzero lead works).
PVec pmod(PVec a, const PVec& b, uint32_t p) {
    ptrim(a);
    uint32_t lead = b.back();
    uint32_t lead_inv = 1;
    for (uint32_t e = p - 2, base = lead; e; e >>= 1) {  // Fermat inverse
        if (e & 1) lead_inv = static_cast<uint32_t>(static_cast<uint64_t>(lead_inv) * base % p);
        base = static_cast<uint32_t>(static_cast<uint64_t>(base) * base % p);
    }
    while (a.size() >= b.size()) {
        uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) * lead_inv % p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = static_cast<uint64_t>(c) * b[i] % p;
            a[i + shift] = static_cast<uint32_t>((a[i + shift] + p - sub) % p);
        }
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

bool divides(const PVec& d, const PVec& a, uint32_t p) { return pmod(a, d, p).empty(); }

bool is_irreducible(const PVec& m, uint32_t p) {
    size_t n = m.size() - 1;
    if (n < 1 || m.back() == 0) return false;
    if (n == 1) return true;
    if (m[0] == 0) return false;  // divisible by t
    // Trial division by every monic polynomial of degree 1..n/2.
    for (size_t d = 1; 2 * d <= n; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            PVec cand(d + 1, 0);
            uint64_t c = code;
            for (size_t i = 0; i < d; ++i) {
                cand[i] = static_cast<uint32_t>(c % p);
                c /= p;
            }
            cand[d] = 1;
            if (divides(cand, m, p)) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(uint32_t p, uint32_t n, std::vector<uint32_t> modulus)
    : p_(p), n_(n), mod_(std::move(modulus)) {
    if (!is_prime(p_)) throw DomainError("field characteristic must be prime");
    if (n_ < 1) throw DomainError("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < n_; ++i) {
        q *= p_;
        if (q > (1u << 16)) throw DomainError("field order exceeds 2^16");
    }
    q_ = static_cast<uint32_t>(q);
    if (n_ > 1) {
        if (mod_.size() != n_ + 1 || mod_.back() != 1)
            throw DomainError("modulus must be monic of degree n");
        for (uint32_t c : mod_)
            if (c >= p_) throw DomainError("modulus coefficient out of range");
        if (!is_irreducible(mod_, p_)) throw DomainError("modulus is reducible");
    } else {
        mod_.clear();
    }
    key_ = (static_cast<uint64_t>(p_) << 32) ^ (static_cast<uint64_t>(n_) << 16);
    for (uint32_t c : mod_) key_ = key_ * 0x100000001b3ull ^ c;
    if (q_ <= 256) build_tables();
}

Field Field::prime(uint32_t p) { return Field(p, 1, {}); }

Field Field::extension(uint32_t p, uint32_t n, const std::vector<uint32_t>& modulus) {
    return Field(p, n, modulus);
}

std::vector<uint32_t> Field::find_modulus(uint32_t p, uint32_t n) {
    if (!is_prime(p)) throw DomainError("field characteristic must be prime");
    if (n < 2) throw DomainError("find_modulus needs degree >= 2");
    uint64_t count = 1;
    for (uint32_t i = 0; i < n; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
        PVec cand(n + 1, 0);
        uint64_t c = code;
        for (uint32_t i = 0; i < n; ++i) {
            cand[i] = static_cast<uint32_t>(c % p);
            c /= p;
        }
        cand[n] = 1;
        if (is_irreducible(cand, p)) return cand;
    }
    throw DomainError("no irreducible modulus found");  // unreachable
}

std::vector<uint32_t> Field::digits(uint32_t code) const {
    std::vector<uint32_t> d(n_);
    for (uint32_t i = 0; i < n_; ++i) {
        d[i] = code % p_;
        code /= p_;
    }
    return d;
}

uint32_t Field::from_digits(const std::vector<uint32_t>& d) const {
    uint32_t code = 0;
    for (size_t i = d.size(); i-- > 0;) code = code * p_ + d[i] % p_;
    return code;
}

uint32_t Field::add_ext(uint32_t a, uint32_t b) const {
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < n_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

uint32_t Field::neg_ext(uint32_t a) const {
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < n_; ++i) {
        uint32_t d = a % p_;
        r += (d ? p_ - d : 0) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
    if (n_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    PVec da = digits(a), db = digits(b);
    ptrim(da);
    ptrim(db);
    PVec prod = pmod(pmul(da, db, p_), mod_, p_);
    prod.resize(n_, 0);
    return from_digits(prod);
}

uint32_t Field::inv_slow(uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero field element");
    // a^(q-2); fine at desk scale.
    uint32_t r = 1, base = a;
    for (uint32_t e = q_ - 2; e; e >>= 1) {
        if (e & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
    }
    return r;
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero field element");
    return tables_ ? inv_table_[a] : inv_slow(a);
}

void Field::build_tables() {
    mul_table_.assign(static_cast<size_t>(q_) * q_, 0);
    inv_table_.assign(q_, 0);
    for (uint32_t a = 0; a < q_; ++a)
        for (uint32_t b = a; b < q_; ++b) {
            uint16_t m = static_cast<uint16_t>(mul_slow(a, b));
            mul_table_[a * q_ + b] = m;
            mul_table_[b * q_ + a] = m;
            if (m == 1) {
                inv_table_[a] = static_cast<uint16_t>(b);
                inv_table_[b] = static_cast<uint16_t>(a);
            }
        }
    tables_ = true;
}

}  // namespace modray
