#include "modray/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace modray::stats {

namespace {

// Series representation, valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x) by modified Lentz, valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
    if (a <= 0) throw std::invalid_argument("gamma_p needs a > 0");
    if (x < 0) throw std::invalid_argument("gamma_p needs x >= 0");
    if (x == 0) return 0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double chi_square_cdf(double x, double dof) {
    if (x <= 0) return 0;
    return gamma_p(dof / 2.0, x / 2.0);
}

double chi_square_quantile(double p, double dof) {
    if (p <= 0 || p >= 1) throw std::invalid_argument("quantile needs 0 < p < 1");
    double lo = 0, hi = dof + 40.0 * std::sqrt(dof) + 100.0;
    while (chi_square_cdf(hi, dof) < p) hi *= 2;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (chi_square_cdf(mid, dof) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double chi_square_stat(const std::vector<double>& observed, const std::vector<double>& expected) {
    if (observed.size() != expected.size())
        throw std::invalid_argument("cell count mismatch");
    double s = 0;
    for (size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0) continue;
        double d = observed[i] - expected[i];
        s += d * d / expected[i];
    }
    return s;
}

ChiSquareTest chi_square_test(const std::vector<double>& observed,
                              const std::vector<double>& expected, double p) {
    ChiSquareTest t;
    t.statistic = chi_square_stat(observed, expected);
    t.dof = static_cast<double>(observed.size()) - 1;
    t.threshold = chi_square_quantile(p, t.dof);
    t.pass = t.statistic <= t.threshold;
    return t;
}

ChiSquareTest chi_square_independence(const std::vector<std::vector<double>>& table, double p) {
    size_t rows = table.size();
    size_t cols = rows ? table[0].size() : 0;
    if (rows < 2 || cols < 2) throw std::invalid_argument("contingency table too small");
    std::vector<double> row_sum(rows, 0), col_sum(cols, 0);
    double total = 0;
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            row_sum[i] += table[i][j];
            col_sum[j] += table[i][j];
            total += table[i][j];
        }
    ChiSquareTest t;
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            double e = row_sum[i] * col_sum[j] / total;
            if (e <= 0) continue;
            double d = table[i][j] - e;
            t.statistic += d * d / e;
        }
    t.dof = static_cast<double>((rows - 1) * (cols - 1));
    t.threshold = chi_square_quantile(p, t.dof);
    t.pass = t.statistic <= t.threshold;
    return t;
}

}  // namespace modray::stats
