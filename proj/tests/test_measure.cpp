#include <doctest.h>

#include <cmath>
#include <map>

#include "modray/experiments.hpp"
#include "modray/parse.hpp"
#include "modray/stats.hpp"

using namespace modray;

TEST_CASE("chi-square quantiles against frozen reference values") {
    // Reference values computed independently (scipy.stats.chi2.ppf).
    CHECK(stats::chi_square_quantile(0.999, 63) == doctest::Approx(103.44237731987324).epsilon(1e-9));
    CHECK(stats::chi_square_quantile(0.999, 16) == doctest::Approx(39.252354790768464).epsilon(1e-9));
    CHECK(stats::chi_square_quantile(0.999, 1) == doctest::Approx(10.827566170662733).epsilon(1e-9));
    CHECK(stats::chi_square_cdf(stats::chi_square_quantile(0.99, 10), 10) ==
          doctest::Approx(0.99).epsilon(1e-10));
}

TEST_CASE("quotient law masses and degree frequencies") {
    Field f = Field::prime(2);
    QuotientLaw nu(f);
    CHECK(nu.mass_exponent(parse_poly(f, "X")) == -2);      // nu(X) = 1/4
    CHECK(nu.mass_exponent(parse_poly(f, "X+1")) == -2);    // nu(X+1) = 1/4
    CHECK(nu.mass_exponent(parse_poly(f, "X^2+X")) == -4);  // deg 2: 1/16
    CHECK_THROWS_AS(nu.mass_exponent(Poly::one(f)), DomainError);

    // Empirical degree law over 10^6 draws at q = 3: within 4 standard errors
    // of (q-1) q^-n.
    Field f3 = Field::prime(3);
    QuotientLaw nu3(f3);
    RngStream rng(5);
    const uint64_t N = 1000000;
    std::map<int, uint64_t> counts;
    for (uint64_t i = 0; i < N; ++i) ++counts[nu3.sample(rng).degree()];
    for (int n = 1; n <= 8; ++n) {
        double p = 2.0 * std::pow(3.0, -n);
        double mu = static_cast<double>(N) * p;
        double sd = std::sqrt(static_cast<double>(N) * p * (1 - p));
        CHECK(std::fabs(static_cast<double>(counts[n]) - mu) <= 4 * sd);
    }
    // Conditional on the degree, polynomials are uniform: check degree 1 at
    // q = 2 where the two candidates X and X+1 each have mass 1/4.
    RngStream rng2(6);
    QuotientLaw nu2(f);
    uint64_t x_count = 0, x1_count = 0, total = 200000;
    for (uint64_t i = 0; i < total; ++i) {
        Poly a = nu2.sample(rng2);
        if (a == parse_poly(f, "X")) ++x_count;
        if (a == parse_poly(f, "X+1")) ++x1_count;
    }
    double sd = std::sqrt(total * 0.25 * 0.75);
    CHECK(std::fabs(static_cast<double>(x_count) - total * 0.25) <= 4 * sd);
    CHECK(std::fabs(static_cast<double>(x1_count) - total * 0.25) <= 4 * sd);
}

TEST_CASE("haar draws have uniform cylinders") {
    Field f = Field::prime(2);
    RngStream rng(7);
    const uint64_t N = 100000;
    uint64_t first_zero = 0, val_ge2 = 0;
    std::vector<double> depth3(8, 0.0);
    for (uint64_t i = 0; i < N; ++i) {
        LaurentSeries s = sample_haar_unit_ball(f, rng, 16);
        uint32_t c1 = s.coeff(1), c2 = s.coeff(2), c3 = s.coeff(3);
        if (c1 == 0) ++first_zero;
        if (s.is_normal() && s.val() >= 2) ++val_ge2;
        depth3[c1 * 4 + c2 * 2 + c3] += 1.0;
    }
    double sd = std::sqrt(N * 0.25);
    CHECK(std::fabs(static_cast<double>(first_zero) - N * 0.5) <= 4 * sd);
    // P(f in X^-2 O) = 1/q.
    CHECK(std::fabs(static_cast<double>(val_ge2) - N * 0.5) <= 4 * sd);
    auto t = stats::chi_square_test(depth3, std::vector<double>(8, N / 8.0), 0.999);
    CHECK(t.pass);
}

TEST_CASE("section sampler realizes the rectangle masses") {
    Field f = Field::prime(2);
    RngStream rng(8);
    const uint64_t N = 100000;
    uint64_t a_is_x = 0, joint = 0, fwd_first_zero = 0;
    for (uint64_t i = 0; i < N; ++i) {
        GeodesicSection s = sample_section(f, rng, 16);
        bool ax = s.backward().integer_part() == parse_poly(f, "X");
        bool fz = s.forward().coeff(1) == 0;
        if (ax) ++a_is_x;
        if (fz) ++fwd_first_zero;
        if (ax && fz) ++joint;
    }
    // P([backward] = X) = nu(X) = 1/4.
    double sd = std::sqrt(N * 0.25 * 0.75);
    CHECK(std::fabs(static_cast<double>(a_is_x) - N * 0.25) <= 4 * sd);
    // Forward marginal is Haar: first coefficient uniform.
    CHECK(std::fabs(static_cast<double>(fwd_first_zero) - N * 0.5) <=
          4 * std::sqrt(N * 0.25));
    // Independence of the integer part and the forward cylinder.
    std::vector<std::vector<double>> table{
        {static_cast<double>(joint), static_cast<double>(a_is_x - joint)},
        {static_cast<double>(fwd_first_zero - joint),
         static_cast<double>(N - a_is_x - fwd_first_zero + joint)}};
    CHECK(stats::chi_square_independence(table, 0.999).pass);
}

TEST_CASE("entropy closed form and series") {
    Field f2 = Field::prime(2);
    Field f3 = Field::prime(3);
    CHECK(entropy_closed_form(f2) == doctest::Approx(4 * std::log(2)).epsilon(1e-14));
    CHECK(entropy_closed_form(f3) == doctest::Approx(3 * std::log(3)).epsilon(1e-14));
    for (const Field* f : {&f2, &f3}) {
        EntropySeries s = entropy_series(*f, 40);
        CHECK(s.tail_bound < 1e-9);
        CHECK(std::fabs(entropy_closed_form(*f) - s.value) <= s.tail_bound);
    }
}

TEST_CASE("mean sojourn") {
    CHECK(mean_sojourn(Field::prime(2)) == Rational64{4, 1});
    CHECK(mean_sojourn(Field::prime(3)) == Rational64{3, 1});
    CHECK(mean_sojourn(Field::prime(5)) == Rational64{5, 2});
    RngStream rng(9);
    double emp = mean_sojourn_empirical(Field::prime(2), rng, 100000);
    CHECK(std::fabs(emp - 4.0) / 4.0 < 0.01);
}

TEST_CASE("calcintegral exact partial sums") {
    Field f2 = Field::prime(2);
    CalcIntegral ten = verify_calcintegral(f2, 10);
    CHECK(ten.partial == Rational64{1023, 2048});
    CHECK(ten.exact_match);
    CalcIntegral one = verify_calcintegral(Field::prime(5), 1);
    CHECK(one.partial == Rational64{4, 25});  // (q-1)/q^2
    // D -> infinity limit is 1/q: check the defect is exactly q^-D / q.
    CalcIntegral big = verify_calcintegral(Field::prime(3), 12);
    CHECK(big.partial.den == 3 * big.partial.num + 3);  // (1/3)(1 - 3^-12)
    CHECK_THROWS_AS(verify_calcintegral(f2, 0), DomainError);
}

TEST_CASE("self-similarity of haar under the contracting affine map") {
    // z -> X^-1 z + c maps O onto the cylinder c + X^-1 O, scaling by 1/q;
    // coefficients shift one slot deeper and the image is Haar there.
    Field f = Field::prime(3);
    RngStream rng(10);
    for (uint32_t c = 0; c < 3; ++c) {
        Homography h(Poly::one(f), Poly::monomial(f, c, 1), Poly::zero(f), Poly::x(f));
        std::vector<double> counts(27, 0.0);
        const uint64_t N = 27000;
        for (uint64_t i = 0; i < N; ++i) {
            LaurentSeries x = sample_haar_ball(f, rng, 8);
            LaurentSeries y = h.apply_series(x);
            CHECK(y.coeff(0) == c);
            for (int k = 1; k <= 4; ++k) CHECK(y.coeff(k) == x.coeff(k - 1));
            counts[y.coeff(1) * 9 + y.coeff(2) * 3 + y.coeff(3)] += 1.0;
            if (i == 0) CHECK(conformal_exponent(h, x) == -1);
        }
        CHECK(stats::chi_square_test(counts, std::vector<double>(27, N / 27.0), 0.999).pass);
    }
}

TEST_CASE("translations and unit dilations transform cylinders exactly") {
    Field f = Field::prime(3);
    RngStream rng(11);
    Poly a = parse_poly(f, "X^2+2*X");
    Homography t = Homography::translation(a);
    Homography d = Homography::dilation(FieldElement(f, 2));
    for (int i = 0; i < 200; ++i) {
        LaurentSeries x = sample_haar_unit_ball(f, rng, 12);
        LaurentSeries tx = t.apply_series(x);
        // A polynomial translation changes only the integer part.
        CHECK(tx.integer_part() == a);
        for (int k = 1; k <= 8; ++k) CHECK(tx.coeff(k) == x.coeff(k));
        CHECK(conformal_exponent(t, x) == 0);
        // A unit dilation scales every coefficient.
        LaurentSeries dx = d.apply_series(x);
        for (int k = 1; k <= 8; ++k) CHECK(dx.coeff(k) == f.mul(2, x.coeff(k)));
        CHECK(conformal_exponent(d, x) == 0);
    }
}

TEST_CASE("reports are schema-valid and bit-reproducible") {
    Field f = Field::prime(2);
    ExperimentConfig cfg;
    cfg.seed = 4242;
    cfg.samples = 3000;
    cfg.depth = 4;
    Report a = experiment_haar(f, cfg);
    Report b = experiment_haar(f, cfg);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(report_json_is_valid(a.to_json()));
    cfg.samples = 500;
    CHECK(report_json_is_valid(experiment_sojourn(f, cfg).to_json()));
    CHECK(report_json_is_valid(experiment_entropy(f, cfg).to_json()));
}

TEST_CASE("biased tabulation must fail the haar test") {
    Field f = Field::prime(2);
    ExperimentConfig cfg;
    cfg.seed = 1;
    cfg.samples = 20000;
    cfg.depth = 4;
    cfg.bias = true;
    CHECK(!experiment_haar(f, cfg).pass);
    cfg.bias = false;
    CHECK(experiment_haar(f, cfg).pass);
}

TEST_CASE("rational helper reduces") {
    CHECK(make_rational(6, -4) == Rational64{-3, 2});
    CHECK(to_string(make_rational(1023, 2048)) == "1023/2048");
    CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
}
