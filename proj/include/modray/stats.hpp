#pragma once

#include <cstdint>
#include <vector>

namespace modray::stats {

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// CDF of the chi-square distribution with dof degrees of freedom.
double chi_square_cdf(double x, double dof);

/// Quantile: the x with chi_square_cdf(x, dof) = p, by bisection.
double chi_square_quantile(double p, double dof);

/// Pearson statistic sum (obs - exp)^2 / exp over cells with exp > 0.
double chi_square_stat(const std::vector<double>& observed, const std::vector<double>& expected);

struct ChiSquareTest {
    double statistic = 0;
    double dof = 0;
    double threshold = 0;
    bool pass = false;
};

/// One-sample test of counts against expected cell counts at quantile p.
ChiSquareTest chi_square_test(const std::vector<double>& observed,
                              const std::vector<double>& expected, double p);

/// Independence test on a contingency table (row-major, r x c) at quantile p;
/// dof = (r-1)(c-1), expectations from the margins.
ChiSquareTest chi_square_independence(const std::vector<std::vector<double>>& table, double p);

}  // namespace modray::stats
