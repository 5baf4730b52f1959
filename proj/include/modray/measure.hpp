#pragma once

#include <cstdint>

#include "modray/coding.hpp"
#include "modray/rng.hpp"

namespace modray {

/// An exact rational number (reduced, positive denominator).
struct Rational64 {
    int64_t num = 0;
    int64_t den = 1;
    bool operator==(const Rational64& o) const { return num == o.num && den == o.den; }
};
Rational64 make_rational(int64_t num, int64_t den);
std::string to_string(const Rational64& r);

/// The partial-quotient law on A - k: mass q^(-2 deg a) per polynomial, so
/// P(deg = n) = (q-1) q^-n and, given the degree, the polynomial is uniform.
struct QuotientLaw {
    explicit QuotientLaw(const Field& f) : field(&f) {}
    const Field* field;
    /// Exact mass of a single polynomial as a q-exponent: nu(a) = q^e.
    int mass_exponent(const Poly& a) const;
    Poly sample(RngStream& rng) const;
};

/// Haar draw on X^-1*O (unit-normalized on O): coefficients at indices
/// 1..prec independent uniform over k.
LaurentSeries sample_haar_unit_ball(const Field& f, RngStream& rng, int prec);
/// Haar draw on O: indices 0..prec.
LaurentSeries sample_haar_ball(const Field& f, RngStream& rng, int prec);

/// One draw from the flow-invariant probability measure on sections.
///
/// On the rectangle { [backward] = a } x X^-1*O the kernel |xi+ - xi-|^-2 is
/// the constant |a|^-2 (ultrametric: the endpoints differ by the integer
/// part), so the measure restricted to the rectangle is the normalized
/// product of Haar measures with total rectangle mass nu(a) = q^(-2 deg a).
/// Hence: draw a from nu, then both fractional parts independently Haar.
GeodesicSection sample_section(const Field& f, RngStream& rng, int prec);

/// Shift entropy of the quotient process: 2 q ln q / (q - 1).
double entropy_closed_form(const Field& f);
struct EntropySeries {
    double value = 0;       // -sum_{deg a <= D} nu(a) ln nu(a)
    double tail_bound = 0;  // analytic bound on the omitted tail
};
EntropySeries entropy_series(const Field& f, int max_degree);

/// Mean horoball sojourn length 2q/(q-1), exactly.
Rational64 mean_sojourn(const Field& f);
double mean_sojourn_empirical(const Field& f, RngStream& rng, uint64_t samples);

/// Exact partial sums of the unit-ball mass integral over J:
/// sum_{n<=D} (q-1) q^n * q^(-2n) * (1/q) = (1/q)(1 - q^-D).
struct CalcIntegral {
    Rational64 partial;  // term-by-term accumulation
    Rational64 closed;   // (q^D - 1) / q^(D+1)
    bool exact_match = false;
};
CalcIntegral verify_calcintegral(const Field& f, int max_degree);

}  // namespace modray
