#include "modray/measure.hpp"

#include <cmath>
#include <numeric>

namespace modray {

Rational64 make_rational(int64_t num, int64_t den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::string to_string(const Rational64& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

int QuotientLaw::mass_exponent(const Poly& a) const {
    if (a.degree() < 1) throw DomainError("quotient law is supported on A - k");
    return -2 * a.degree();
}

Poly QuotientLaw::sample(RngStream& rng) const {
    const Field& f = *field;
    uint32_t q = f.q();
    int n = 1;
    while (rng.uniform_below(q) == 0) {
        ++n;
        if (n > 4096) throw DomainError("quotient degree overflow");
    }
    std::vector<uint32_t> coeffs(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) coeffs[static_cast<size_t>(i)] = static_cast<uint32_t>(rng.uniform_below(q));
    coeffs[static_cast<size_t>(n)] = 1 + static_cast<uint32_t>(rng.uniform_below(q - 1));
    return Poly(f, std::move(coeffs));
}

namespace {
LaurentSeries haar_from(const Field& f, RngStream& rng, int lo, int prec) {
    std::vector<uint32_t> coeffs(static_cast<size_t>(prec - lo + 1));
    for (auto& c : coeffs) c = static_cast<uint32_t>(rng.uniform_below(f.q()));
    return LaurentSeries::from_coeffs(f, lo, std::move(coeffs), prec, false);
}
}  // namespace

LaurentSeries sample_haar_unit_ball(const Field& f, RngStream& rng, int prec) {
    if (prec < 1) throw DomainError("haar sample needs prec >= 1");
    return haar_from(f, rng, 1, prec);
}

LaurentSeries sample_haar_ball(const Field& f, RngStream& rng, int prec) {
    if (prec < 0) throw DomainError("haar sample needs prec >= 0");
    return haar_from(f, rng, 0, prec);
}

GeodesicSection sample_section(const Field& f, RngStream& rng, int prec) {
    if (prec < 2) throw DomainError("section sample needs prec >= 2");
    QuotientLaw nu(f);
    Poly a = nu.sample(rng);
    // The all-zero fractional draw (a rational endpoint, probability q^-prec,
    // measure zero in the limit) is redrawn.
    for (;;) {
        LaurentSeries back_frac = sample_haar_unit_ball(f, rng, prec);
        LaurentSeries fwd = sample_haar_unit_ball(f, rng, prec);
        if (!back_frac.is_normal() || !fwd.is_normal()) continue;
        LaurentSeries back = LaurentSeries::from_poly(a, prec) + back_frac;
        return GeodesicSection(std::move(back), std::move(fwd));
    }
}

double entropy_closed_form(const Field& f) {
    double q = f.q();
    return 2.0 * q * std::log(q) / (q - 1.0);
}

EntropySeries entropy_series(const Field& f, int max_degree) {
    if (max_degree < 1) throw DomainError("entropy series needs max_degree >= 1");
    double q = f.q();
    double logq = std::log(q);
    EntropySeries out;
    // -sum nu(a) ln nu(a) over deg a = n: (q-1)q^n terms of mass q^-2n each,
    // each contributing 2n ln q.
    double acc = 0;
    for (int n = 1; n <= max_degree; ++n)
        acc += 2.0 * n * logq * (q - 1.0) * std::pow(q, -n);
    out.value = acc;
    // Tail: 2 ln q (q-1) sum_{n>D} n q^-n; bounded strictly above by the
    // same sum with (D+1) - D x replaced by D+1 in the closed form
    // x^(D+1) ((D+1) - D x) / (1-x)^2, leaving margin over roundoff.
    double x = 1.0 / q;
    double tail_sum = std::pow(x, max_degree + 1) * (max_degree + 1) / ((1 - x) * (1 - x));
    out.tail_bound = 2.0 * logq * (q - 1.0) * tail_sum;
    return out;
}

Rational64 mean_sojourn(const Field& f) {
    return make_rational(2 * static_cast<int64_t>(f.q()), static_cast<int64_t>(f.q()) - 1);
}

double mean_sojourn_empirical(const Field& f, RngStream& rng, uint64_t samples) {
    QuotientLaw nu(f);
    double acc = 0;
    for (uint64_t i = 0; i < samples; ++i) acc += 2.0 * nu.sample(rng).degree();
    return acc / static_cast<double>(samples);
}

CalcIntegral verify_calcintegral(const Field& f, int max_degree) {
    if (max_degree < 1) throw DomainError("calcintegral needs max_degree >= 1");
    int64_t q = f.q();
    if (max_degree * std::log2(static_cast<double>(q)) > 61)
        throw DomainError("calcintegral partial sum would overflow");
    int64_t qD1 = 1;  // q^(D+1)
    for (int i = 0; i <= max_degree; ++i) qD1 *= q;
    // Term n is (q-1) q^n q^-2n / q = (q-1) q^(D-n) / q^(D+1).
    int64_t num = 0;
    int64_t power = qD1 / (q * q);  // q^(D-n) at n = 1
    for (int n = 1; n <= max_degree; ++n) {
        num += (q - 1) * power;
        power /= q;
    }
    CalcIntegral out;
    out.partial = make_rational(num, qD1);
    out.closed = make_rational(qD1 / q - 1, qD1);  // (q^D - 1) / q^(D+1)
    out.exact_match = out.partial == out.closed;
    return out;
}

}  // namespace modray
