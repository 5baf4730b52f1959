#include "modray/coding.hpp"

namespace modray {

namespace {

LaurentSeries embed_poly_against(const Poly& p, const LaurentSeries& ref) {
    int slack = 8 + std::abs(p.is_zero() ? 0 : p.degree());
    if (ref.is_normal()) slack += std::abs(ref.val());
    return LaurentSeries::from_poly(p, ref.prec() + slack);
}

}  // namespace

GeodesicSection::GeodesicSection(LaurentSeries backward, LaurentSeries forward)
    : backward_(std::move(backward)), forward_(std::move(forward)) {
    if (backward_.field() != forward_.field()) throw DomainError("field mismatch");
    if (!forward_.is_normal() || forward_.val() < 1)
        throw DomainError("forward endpoint must be a normal series in X^-1*O");
    if (!backward_.is_normal() || backward_.val() > -1)
        throw DomainError("backward endpoint must lie in J (integer part of degree >= 1)");
    if (backward_.prec() < 0)
        throw PrecisionExhausted("backward endpoint integer part not certified");
}

BetaSeq::BetaSeq(int lo, std::vector<AffineMap> values) : Window<AffineMap>(lo, values) {
    for (const auto& m : v_)
        if (!m.in_gamma_prime())
            throw DomainError("beta letter outside Gamma'_inf (translation degree < 1)");
}

BetaSeq time_reversal(const Window<AffineMap>& seq) {
    std::vector<AffineMap> out;
    out.reserve(seq.size());
    for (int n = -seq.hi(); n <= -seq.lo(); ++n) out.push_back(seq.at(-n).inverse());
    return BetaSeq(-seq.hi(), std::move(out));
}

FirstReturnStep first_return(const GeodesicSection& s) {
    const LaurentSeries& fwd = s.forward();
    if (fwd.prec() - 2 * fwd.val() < 1 && !fwd.exact())
        throw PrecisionExhausted("budget below one first-return step");
    ArtinStep step = artin_step(fwd);
    if (step.next.is_exact_zero())
        throw RationalEndpoint("forward endpoint reached an exact rational");
    if (step.next.is_zero_to_prec())
        throw PrecisionExhausted("forward iterate is zero to precision");
    LaurentSeries inv_back = s.backward().invert();
    LaurentSeries new_back =
        inv_back - embed_poly_against(step.quotient.poly(), inv_back);
    return {GeodesicSection(std::move(new_back), std::move(step.next)),
            std::move(step.quotient)};
}

GeodesicSection reversed_section(const GeodesicSection& s) {
    return GeodesicSection(s.forward().invert(), s.backward().invert());
}

QuotientSeq code_quotients(const GeodesicSection& s, int n_back, int n_fwd) {
    if (n_back < 0 || n_fwd < 0) throw DomainError("window bounds must be nonnegative");
    CfExpansion fwd = cf_expand(s.forward(), n_fwd);
    if (static_cast<int>(fwd.terms.size()) < n_fwd) {
        if (fwd.terminated == CfTermination::ExactRational)
            throw RationalEndpoint("forward endpoint is rational");
        throw PrecisionExhausted("forward expansion exhausted before filling the window");
    }
    CfExpansion bwd = cf_expand(-(s.backward().invert()), n_back + 1);
    if (static_cast<int>(bwd.terms.size()) < n_back + 1) {
        if (bwd.terminated == CfTermination::ExactRational)
            throw RationalEndpoint("backward endpoint is rational");
        throw PrecisionExhausted("backward expansion exhausted before filling the window");
    }
    std::vector<PartialQuotient> values;
    values.reserve(static_cast<size_t>(n_back + n_fwd + 1));
    for (int n = -n_back; n <= 0; ++n) values.push_back(bwd.terms[static_cast<size_t>(-n)]);
    for (int n = 1; n <= n_fwd; ++n) values.push_back(fwd.terms[static_cast<size_t>(n - 1)]);
    return QuotientSeq(-n_back, std::move(values));
}

DecoratedCoding code_decorated(const GeodesicSection& s, int n_back, int n_fwd) {
    const Field& k = s.field();
    QuotientSeq q = code_quotients(s, n_back, n_fwd);

    // Horoball centers xi_n for n in [-(n_back+1), n_fwd+1]: the convergents
    // of the two endpoints, with xi_0 = infinity and xi_1 = 0.
    auto xi_store = std::vector<ProjPoint>(static_cast<size_t>(n_back + n_fwd + 3),
                                           ProjPoint::infinity(k));
    int xi_lo = -(n_back + 1);
    auto xi = [&](int n) -> ProjPoint& { return xi_store[static_cast<size_t>(n - xi_lo)]; };
    xi(0) = ProjPoint::infinity(k);
    xi(1) = ProjPoint::zero(k);
    {
        std::vector<PartialQuotient> terms;
        for (int n = 1; n <= n_fwd; ++n) {
            terms.push_back(q.at(n));
            xi(n + 1) = ProjPoint::finite(cf_eval(terms));
        }
    }
    {
        std::vector<Poly> terms;  // a_0, a_-1, ...; xi_-n = -(a_0 + 1/(a_-1 + ...))
        for (int n = 1; n <= n_back + 1; ++n) {
            terms.push_back(q.at(-(n - 1)).poly());
            xi(-n) = ProjPoint::finite(-cf_value(terms));
        }
    }

    // Decoration centers eta_n: each step conjugates by the involution fixing
    // the middle of three consecutive horoball centers and swapping the outer
    // two; the decoration edge itself is never materialized.
    auto eta_store = std::vector<ProjPoint>(static_cast<size_t>(n_back + n_fwd + 2),
                                            ProjPoint::one(k));
    auto eta = [&](int n) -> ProjPoint& { return eta_store[static_cast<size_t>(n - xi_lo)]; };
    eta(0) = ProjPoint::one(k);
    for (int n = 0; n < n_fwd; ++n) {
        Homography half = involution_through(xi(n + 1), xi(n), xi(n + 2));
        eta(n + 1) = half.apply(eta(n));
    }
    for (int n = 0; n <= n_back; ++n) {
        Homography half = involution_through(xi(-n), xi(-n + 1), xi(-n - 1));
        eta(-(n + 1)) = half.apply(eta(-n));
    }

    // Frames gamma_n on [-(n_back+1), n_fwd] and letters beta_n on
    // [-n_back, n_fwd].
    std::vector<Homography> frames;
    frames.reserve(static_cast<size_t>(n_back + n_fwd + 2));
    for (int n = -(n_back + 1); n <= n_fwd; ++n)
        frames.push_back(homography_from_triple(xi(n), eta(n), xi(n + 1)));
    Window<Homography> frame_win(-(n_back + 1), std::move(frames));
    if (!frame_win.at(0).is_identity())
        throw DomainError("section is not based at the standard frame");

    Homography inv = Homography::inversion(k);
    std::vector<AffineMap> letters;
    letters.reserve(static_cast<size_t>(n_back + n_fwd + 1));
    for (int n = -n_back; n <= n_fwd; ++n) {
        Homography beta = inv * frame_win.at(n - 1).inverse() * frame_win.at(n);
        letters.push_back(beta.affine_decompose());
    }
    BetaSeq beta_win(-n_back, std::move(letters));

    // Normal-form reduction: peel the letters into translation parts and
    // residual multipliers; the translations must reproduce the Artin
    // quotients exactly.
    const Field& f = k;
    uint32_t r = 1;  // residual square multiplier of the forward chain
    for (int n = 1; n <= n_fwd; ++n) {
        const AffineMap& b = beta_win.at(n);
        Poly a_n = b.translation() * f.inv(r);
        if (a_n != q.at(n).poly())
            throw DomainError("decorated coding disagrees with the quotient coding");
        r = f.div(b.multiplier().code(), r);
    }
    if (n_back >= 0) {
        const AffineMap& b0 = beta_win.at(0);
        uint32_t r_b = b0.multiplier().code();
        Poly a_0 = b0.translation() * f.inv(r_b);
        if (a_0 != q.at(0).poly())
            throw DomainError("decorated coding disagrees with the quotient coding");
        for (int n = 1; n <= n_back; ++n) {
            const AffineMap& b = beta_win.at(-n);
            uint32_t u = b.multiplier().code();
            uint32_t r_new = f.div(u, r_b);
            Poly a_n = b.translation() * f.inv(r_new);
            if (a_n != q.at(-n).poly())
                throw DomainError("decorated coding disagrees with the quotient coding");
            r_b = r_new;
        }
    }

    return {std::move(beta_win), std::move(frame_win), std::move(q)};
}

Window<Homography> frames_from_letters(const BetaSeq& seq) {
    if (seq.lo() > 1 || seq.hi() < 0)
        throw DomainError("letter window must reach index 0 (or start at 1)");
    const Field& k = seq.at(seq.lo()).multiplier().field();
    Homography inv = Homography::inversion(k);
    std::vector<Homography> frames(static_cast<size_t>(seq.hi() - seq.lo() + 2),
                                   Homography::identity(k));
    int lo = seq.lo() - 1;
    auto at = [&](int n) -> Homography& { return frames[static_cast<size_t>(n - lo)]; };
    at(0) = Homography::identity(k);
    for (int n = 1; n <= seq.hi(); ++n) at(n) = at(n - 1) * inv * seq.at(n).to_homography();
    for (int n = 0; n >= seq.lo(); --n)
        at(n - 1) = at(n) * seq.at(n).to_homography().inverse() * inv;
    return Window<Homography>(lo, std::move(frames));
}

}  // namespace modray
