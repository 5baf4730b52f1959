#include <doctest.h>

#include "modray/coding.hpp"
#include "modray/measure.hpp"
#include "modray/parse.hpp"

using namespace modray;

namespace {

GeodesicSection section_from_rationals(const RationalFunction& backward,
                                       const RationalFunction& forward, int prec) {
    return GeodesicSection(LaurentSeries::from_rational(backward, prec),
                           LaurentSeries::from_rational(forward, prec));
}

}  // namespace

TEST_CASE("first return against the rational oracle") {
    Field f = Field::prime(2);
    // forward = X/(X^2+1), backward = X + 1/X^3 = (X^4+1)/X^3.
    RationalFunction fwd(parse_poly(f, "X"), parse_poly(f, "X^2+1"));
    RationalFunction bwd(parse_poly(f, "X^4+1"), parse_poly(f, "X^3"));
    GeodesicSection s = section_from_rationals(bwd, fwd, 40);
    FirstReturnStep step = first_return(s);
    CHECK(step.quotient.poly() == parse_poly(f, "X"));  // [1/forward] = X
    // New forward: Artin image 1/X; new backward: 1/backward - X.
    RationalFunction fwd_next(Poly::one(f), parse_poly(f, "X"));
    RationalFunction bwd_next = bwd.inverse() - RationalFunction::from_poly(Poly::x(f));
    CHECK(step.section.forward().agrees_with(
        LaurentSeries::from_rational(fwd_next, step.section.forward().prec()),
        step.section.forward().prec()));
    CHECK(step.section.backward().agrees_with(
        LaurentSeries::from_rational(bwd_next, step.section.backward().prec()),
        step.section.backward().prec()));
    // The new backward endpoint lies in J with integer part -a1.
    CHECK(step.section.backward().integer_part() == parse_poly(f, "X"));
}

TEST_CASE("first-return backward endpoints stay in J across random sections") {
    Field f = Field::prime(3);
    RngStream rng(61);
    for (int i = 0; i < 100; ++i) {
        GeodesicSection s = sample_section(f, rng, 64);
        FirstReturnStep step = first_return(s);
        CHECK(step.section.backward().integer_part().degree() >= 1);
        CHECK(step.section.forward().val() >= 1);
    }
}

TEST_CASE("quotient window index conventions") {
    Field f = Field::prime(3);
    RngStream rng(62);
    GeodesicSection s = sample_section(f, rng, 128);
    QuotientSeq w = code_quotients(s, 3, 3);
    // a_1 is the first quotient of the forward endpoint.
    CHECK(w.at(1) == cf_expand(s.forward(), 1).terms.at(0));
    // a_0 and a_-1 are the first two quotients of -1/backward.
    CfExpansion back = cf_expand(-(s.backward().invert()), 2);
    CHECK(w.at(0) == back.terms.at(0));
    CHECK(w.at(-1) == back.terms.at(1));
}

TEST_CASE("char-2 reversal side equals the plain reciprocal expansion") {
    Field f = Field::prime(2);
    RngStream rng(63);
    GeodesicSection s = sample_section(f, rng, 64);
    LaurentSeries minus = -(s.backward().invert());
    CHECK(minus == s.backward().invert());
}

TEST_CASE("shift conjugacy of the quotient coding") {
    for (uint32_t q : {2u, 3u, 4u}) {
        Field f = q == 4 ? Field::extension(2, 2, {1, 1, 1}) : Field::prime(q);
        RngStream rng(700 + q);
        for (int i = 0; i < 20; ++i) {
            GeodesicSection s = sample_section(f, rng, 128);
            QuotientSeq w = code_quotients(s, 5, 5);
            QuotientSeq w2 = code_quotients(first_return(s).section, 4, 4);
            for (int n = -4; n <= 4; ++n) CHECK(w2.at(n) == w.at(n + 1));
        }
    }
}

TEST_CASE("window shift and time reversal primitives") {
    Field f = Field::prime(3);
    std::vector<AffineMap> v{AffineMap(FieldElement(f, 1), parse_poly(f, "X")),
                             AffineMap(FieldElement(f, 2), parse_poly(f, "X^2")),
                             AffineMap(FieldElement(f, 2), parse_poly(f, "X+1"))};
    BetaSeq seq(-1, v);
    CHECK(seq.shifted(1).shifted(-1) == static_cast<const Window<AffineMap>&>(seq));
    BetaSeq twice = time_reversal(time_reversal(seq));
    CHECK(static_cast<const Window<AffineMap>&>(twice) ==
          static_cast<const Window<AffineMap>&>(seq));
    // The fixed example: beta_2 = (2, X) over F_3 is its own inverse.
    BetaSeq one(2, {AffineMap(FieldElement(f, 2), parse_poly(f, "X"))});
    BetaSeq rev = time_reversal(one);
    CHECK(rev.lo() == -2);
    CHECK(rev.at(-2) == one.at(2));
}

TEST_CASE("decorated coding: frames, letters, and cross-checks") {
    for (uint32_t q : {2u, 3u}) {
        Field f = Field::prime(q);
        RngStream rng(800 + q);
        for (int i = 0; i < 20; ++i) {
            GeodesicSection s = sample_section(f, rng, 128);
            DecoratedCoding dc = code_decorated(s, 4, 4);  // throws on cross-check failure
            CHECK(dc.frames.at(0).is_identity());
            for (int n = dc.letters.lo(); n <= dc.letters.hi(); ++n) {
                CHECK(dc.letters.at(n).in_gamma_prime());
                CHECK(dc.letters.at(n).translation().degree() ==
                      dc.quotients.at(n).degree());
            }
            // Frames land in the modular group.
            for (int n = dc.frames.lo(); n <= dc.frames.hi(); ++n)
                CHECK(dc.frames.at(n).in_modular_group());
        }
    }
}

TEST_CASE("normal form of the frames") {
    Field f = Field::prime(3);
    RngStream rng(90);
    GeodesicSection s = sample_section(f, rng, 128);
    DecoratedCoding dc = code_decorated(s, 3, 3);
    // gamma_n = i t_{a_1} i t_{a_2} ... i t_{a_n} l_{r_n} with the residual
    // multipliers reconstructed from the letters.
    Homography inv = Homography::inversion(f);
    Homography acc = Homography::identity(f);
    uint32_t r = 1;
    for (int n = 1; n <= dc.letters.hi(); ++n) {
        acc = acc * inv * Homography::translation(dc.quotients.at(n).poly());
        r = f.div(dc.letters.at(n).multiplier().code(), r);
        CHECK(dc.frames.at(n) == acc * Homography::dilation(FieldElement(f, r)));
    }
}

TEST_CASE("frames from letters") {
    Field f = Field::prime(2);
    BetaSeq single(1, {AffineMap(FieldElement::one(f), Poly::x(f))});
    Window<Homography> frames = frames_from_letters(single);
    CHECK(frames.at(0).is_identity());
    CHECK(frames.at(1) == Homography::inversion(f) * Homography::translation(Poly::x(f)));

    RngStream rng(91);
    GeodesicSection s = sample_section(f, rng, 128);
    DecoratedCoding dc = code_decorated(s, 3, 3);
    Window<Homography> rebuilt = frames_from_letters(dc.letters);
    for (int n = rebuilt.lo(); n <= rebuilt.hi(); ++n) CHECK(rebuilt.at(n) == dc.frames.at(n));
}

TEST_CASE("letters of the reversed section are the reversed letters") {
    for (uint32_t q : {2u, 3u}) {
        Field f = Field::prime(q);
        RngStream rng(900 + q);
        for (int i = 0; i < 10; ++i) {
            GeodesicSection s = sample_section(f, rng, 128);
            DecoratedCoding dc = code_decorated(s, 4, 4);
            DecoratedCoding dr = code_decorated(reversed_section(s), 4, 4);
            BetaSeq expected = time_reversal(dc.letters.shifted(1));
            int lo = std::max(dr.letters.lo(), expected.lo());
            int hi = std::min(dr.letters.hi(), expected.hi());
            REQUIRE(hi >= lo);
            for (int n = lo; n <= hi; ++n) CHECK(dr.letters.at(n) == expected.at(n));
        }
    }
}

TEST_CASE("sequence-space reversal identities") {
    Field f = Field::prime(3);
    RngStream rng(92);
    QuotientLaw nu(f);
    std::vector<AffineMap> v;
    for (int i = 0; i < 9; ++i)
        v.emplace_back(FieldElement(f, 1 + static_cast<uint32_t>(rng.uniform_below(2))),
                       nu.sample(rng));
    BetaSeq seq(-4, v);
    BetaSeq ks = time_reversal(seq.shifted(1));
    BetaSeq out = time_reversal(ks.shifted(1).shifted(1));
    CHECK(static_cast<const Window<AffineMap>&>(out) == seq.shifted(-1));
}

TEST_CASE("section invariants are enforced") {
    Field f = Field::prime(2);
    LaurentSeries good_fwd = LaurentSeries::from_coeffs(f, 1, {1, 1, 1, 1}, 4, false);
    LaurentSeries good_bwd = LaurentSeries::from_coeffs(f, -1, {1, 0, 1, 1, 1, 1}, 4, false);
    CHECK_NOTHROW(GeodesicSection(good_bwd, good_fwd));
    // Forward endpoint outside X^-1*O.
    CHECK_THROWS_AS(GeodesicSection(good_bwd, good_bwd), DomainError);
    // Backward endpoint with constant integer part is outside J.
    CHECK_THROWS_AS(GeodesicSection(good_fwd, good_fwd), DomainError);
    // Rational forward endpoint is terminal.
    LaurentSeries rational_fwd = LaurentSeries::monomial(f, 1, 1, 12, true);
    GeodesicSection s(good_bwd, rational_fwd);
    CHECK_THROWS_AS(first_return(s), RationalEndpoint);
}
