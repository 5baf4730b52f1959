#include "modray/moebius.hpp"

#include <algorithm>

namespace modray {

namespace {

// Homogeneous coordinates of a point of P1(K) as coprime polynomials.
struct Homog {
    Poly x, y;
};

Homog homog(const ProjPoint& p) {
    const Field& f = p.field();
    if (p.is_infinity()) return {Poly::one(f), Poly::zero(f)};
    return {p.value().num(), p.value().den()};
}

Poly wedge(const Homog& a, const Homog& b) { return a.x * b.y - a.y * b.x; }

// Embed an exact polynomial with enough declared precision that series
// products against f are limited by f's certification, not the polynomial's.
LaurentSeries embed_for(const Poly& p, const LaurentSeries& f) {
    int slack = 8 + std::abs(p.is_zero() ? 0 : p.degree());
    int base = f.is_exact_zero() ? 64 : f.prec();
    if (f.is_normal()) slack += std::abs(f.val());
    return LaurentSeries::from_poly(p, base + slack);
}

}  // namespace

Homography::Homography(Poly a, Poly b, Poly c, Poly d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    canonicalize();
    if (det().is_zero()) throw DomainError("singular homography");
}

void Homography::canonicalize() {
    const Field& f = m_[0].field();
    Poly g = Poly::gcd(Poly::gcd(m_[0], m_[1]), Poly::gcd(m_[2], m_[3]));
    if (g.degree() > 0)
        for (auto& e : m_) e = Poly::divmod(e, g).first;
    for (const auto& e : m_) {
        if (!e.is_zero()) {
            uint32_t inv = f.inv(e.leading());
            if (inv != 1)
                for (auto& x : m_) x = x * inv;
            break;
        }
    }
}

Homography Homography::identity(const Field& f) {
    return Homography(Poly::one(f), Poly::zero(f), Poly::zero(f), Poly::one(f));
}

Homography Homography::inversion(const Field& f) {
    return Homography(Poly::zero(f), Poly::one(f), Poly::one(f), Poly::zero(f));
}

Homography Homography::translation(const Poly& a) {
    const Field& f = a.field();
    return Homography(Poly::one(f), a, Poly::zero(f), Poly::one(f));
}

Homography Homography::dilation(const FieldElement& u) {
    const Field& f = u.field();
    if (u.is_zero()) throw DomainError("dilation by zero");
    return Homography(Poly::constant(f, u.code()), Poly::zero(f), Poly::zero(f), Poly::one(f));
}

Homography Homography::from_rational_matrix(const std::array<RationalFunction, 4>& m) {
    Poly den = m[0].den() * m[1].den() * m[2].den() * m[3].den();
    std::array<Poly, 4> e{Poly::zero(m[0].field()), Poly::zero(m[0].field()),
                          Poly::zero(m[0].field()), Poly::zero(m[0].field())};
    for (int i = 0; i < 4; ++i)
        e[static_cast<size_t>(i)] =
            m[static_cast<size_t>(i)].num() *
            Poly::divmod(den, m[static_cast<size_t>(i)].den()).first;
    return Homography(e[0], e[1], e[2], e[3]);
}

Homography Homography::operator*(const Homography& o) const {
    return Homography(m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
                      m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]);
}

Homography Homography::inverse() const {
    return Homography(m_[3], -m_[1], -m_[2], m_[0]);
}

bool Homography::is_identity() const { return *this == identity(field()); }

ProjPoint Homography::apply(const ProjPoint& p) const {
    const Field& f = field();
    if (p.is_infinity()) {
        if (m_[2].is_zero()) return ProjPoint::infinity(f);
        return ProjPoint::finite(RationalFunction(m_[0], m_[2]));
    }
    RationalFunction z = p.value();
    RationalFunction den = RationalFunction::from_poly(m_[2]) * z + RationalFunction::from_poly(m_[3]);
    if (den.is_zero()) return ProjPoint::infinity(f);
    RationalFunction num = RationalFunction::from_poly(m_[0]) * z + RationalFunction::from_poly(m_[1]);
    return ProjPoint::finite(num / den);
}

LaurentSeries Homography::apply_series(const LaurentSeries& f) const {
    LaurentSeries num = embed_for(m_[0], f) * f + embed_for(m_[1], f);
    LaurentSeries den = embed_for(m_[2], f) * f + embed_for(m_[3], f);
    if (den.is_exact_zero()) throw PoleError("homography pole");
    return num * den.invert();
}

AffineMap Homography::affine_decompose() const {
    if (!m_[2].is_zero()) throw NotAffine("homography does not fix infinity");
    // Canonical form of an affine element of Gamma: [[1, b], [0, d]] with d
    // constant; the map is z -> (1/d) z + b/d.
    if (!m_[3].is_constant() || !m_[0].is_constant())
        throw DomainError("affine multiplier is not a unit of A");
    const Field& f = field();
    uint32_t d_inv = f.inv(m_[3].coeff(0));
    uint32_t u = f.mul(m_[0].coeff(0), d_inv);
    return AffineMap(FieldElement(f, u), m_[1] * d_inv);
}

AffineMap::AffineMap(FieldElement u, Poly a) : u_(u), a_(std::move(a)) {
    if (u_.is_zero()) throw DomainError("affine map with zero multiplier");
}

AffineMap AffineMap::operator*(const AffineMap& o) const {
    return AffineMap(u_ * o.u_, o.a_ * u_.code() + a_);
}

AffineMap AffineMap::inverse() const {
    FieldElement ui = u_.inverse();
    return AffineMap(ui, -(a_ * ui.code()));
}

Homography AffineMap::to_homography() const {
    const Field& f = u_.field();
    return Homography(Poly::constant(f, u_.code()), a_, Poly::zero(f), Poly::one(f));
}

Homography homography_from_triple(const ProjPoint& p, const ProjPoint& r, const ProjPoint& s) {
    Homog x1 = homog(p), x2 = homog(r), x3 = homog(s);
    Poly w12 = wedge(x1, x2), w23 = wedge(x2, x3), w13 = wedge(x1, x3);
    if (w12.is_zero() || w23.is_zero() || w13.is_zero())
        throw DegeneratePoints("triple contains coincident points");
    // Columns lambda*x1 and mu*x3 with lambda*x1 + mu*x3 = x2, up to scale.
    return Homography(w23 * x1.x, w12 * x3.x, w23 * x1.y, w12 * x3.y);
}

Homography involution_through(const ProjPoint& fix, const ProjPoint& p, const ProjPoint& q) {
    Homography n = homography_from_triple(p, fix, q);
    return n * Homography::inversion(fix.field()) * n.inverse();
}

int conformal_exponent(const Homography& h, const LaurentSeries& f) {
    LaurentSeries den = embed_for(h.c(), f) * f + embed_for(h.d(), f);
    if (den.is_exact_zero()) throw PoleError("conformal derivative at a pole");
    if (den.is_zero_to_prec())
        throw UncertainValuation("pole proximity exceeds certified precision");
    return h.det().degree() + 2 * den.val();
}

}  // namespace modray
