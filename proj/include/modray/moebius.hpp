#pragma once

#include <array>
#include <optional>

#include "modray/laurent.hpp"

namespace modray {

/// A point of P1(K): a rational function or the point at infinity.
class ProjPoint {
public:
    static ProjPoint infinity(const Field& f) { return ProjPoint(&f, std::nullopt); }
    static ProjPoint finite(RationalFunction r) {
        const Field* f = &r.field();
        return ProjPoint(f, std::move(r));
    }
    static ProjPoint zero(const Field& f) {
        return finite(RationalFunction::zero(f));
    }
    static ProjPoint one(const Field& f) { return finite(RationalFunction::one(f)); }
    static ProjPoint of_poly(const Poly& p) {
        return finite(RationalFunction::from_poly(p));
    }

    bool is_infinity() const { return !v_.has_value(); }
    const RationalFunction& value() const {
        if (is_infinity()) throw DomainError("value of the point at infinity");
        return *v_;
    }
    const Field& field() const { return *f_; }
    bool operator==(const ProjPoint& o) const {
        if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
        return *v_ == *o.v_;
    }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }

private:
    ProjPoint(const Field* f, std::optional<RationalFunction> v) : f_(f), v_(std::move(v)) {}
    const Field* f_;
    std::optional<RationalFunction> v_;
};

class AffineMap;

/// An element of PGL(2, K), canonically represented by a matrix
/// [[a, b], [c, d]] over A with the gcd of the entries removed and the first
/// nonzero entry (in order a, b, c, d) made monic.  Equality is structural on
/// this canonical form.  Membership in Gamma = PGL(2, A) is equivalent to the
/// canonical determinant being a nonzero constant.
class Homography {
public:
    Homography(Poly a, Poly b, Poly c, Poly d);
    static Homography identity(const Field& f);
    /// z -> 1/z (order 2; fixes 1, swaps 0 and infinity).
    static Homography inversion(const Field& f);
    /// z -> z + a.
    static Homography translation(const Poly& a);
    /// z -> u z (u in k^x).  For u = alpha^2 this is the dilation of ratio
    /// alpha^2 associated with diag(alpha, 1/alpha).
    static Homography dilation(const FieldElement& u);
    /// Clears denominators of a matrix over K, then canonicalizes.
    static Homography from_rational_matrix(const std::array<RationalFunction, 4>& m);

    const Poly& a() const { return m_[0]; }
    const Poly& b() const { return m_[1]; }
    const Poly& c() const { return m_[2]; }
    const Poly& d() const { return m_[3]; }
    const Field& field() const { return m_[0].field(); }
    Poly det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

    Homography operator*(const Homography& o) const;  // composition
    Homography inverse() const;
    bool operator==(const Homography& o) const { return m_ == o.m_; }
    bool operator!=(const Homography& o) const { return !(*this == o); }
    bool is_identity() const;

    /// Gamma = PGL(2, A): canonical determinant in k^x.
    bool in_modular_group() const { return det().degree() == 0; }
    /// Fixes infinity (canonical lower-left entry zero).
    bool fixes_infinity() const { return m_[2].is_zero(); }

    ProjPoint apply(const ProjPoint& p) const;
    /// Fractional-linear action on series; follows the precision contracts of
    /// series mul/invert.  PoleError when cf + d is exactly zero.
    LaurentSeries apply_series(const LaurentSeries& f) const;

    /// z -> u z + t for h fixing infinity; NotAffine otherwise.
    AffineMap affine_decompose() const;

private:
    std::array<Poly, 4> m_;
    void canonicalize();
};

/// z -> u z + a with u in k^x.  Lies in Gamma'_inf iff deg a >= 1 (then it
/// moves the base vertex of the tree).
class AffineMap {
public:
    AffineMap(FieldElement u, Poly a);
    const FieldElement& multiplier() const { return u_; }
    const Poly& translation() const { return a_; }
    bool in_gamma_prime() const { return a_.degree() >= 1; }

    AffineMap operator*(const AffineMap& o) const;  // composition
    AffineMap inverse() const;
    bool operator==(const AffineMap& o) const { return u_ == o.u_ && a_ == o.a_; }
    bool operator!=(const AffineMap& o) const { return !(*this == o); }

    Homography to_homography() const;

private:
    FieldElement u_;
    Poly a_;
};

/// The unique order-2 homography fixing `fix` and swapping p and q.
/// DegeneratePoints unless the three points are distinct.
Homography involution_through(const ProjPoint& fix, const ProjPoint& p, const ProjPoint& q);

/// The unique homography sending (infinity, 1, 0) to (p, r, s).
/// DegeneratePoints unless p, r, s are distinct.
Homography homography_from_triple(const ProjPoint& p, const ProjPoint& r, const ProjPoint& s);

/// The conformal derivative exponent e with |h'(f)| = q^e; scale-invariant
/// (e = -v(det) + 2 v(cf + d)).  PoleError at f = h^{-1}(infinity),
/// UncertainValuation when v(cf + d) cannot be certified.
int conformal_exponent(const Homography& h, const LaurentSeries& f);

}  // namespace modray
