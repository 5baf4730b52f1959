#pragma once

#include <array>

#include "modray/measure.hpp"
#include "modray/report.hpp"
#include "modray/tree.hpp"

namespace modray {

struct ExperimentConfig {
    uint64_t seed = 0;
    uint64_t samples = 100000;
    int prec = 256;
    int depth = 6;        // haar: cylinder depth
    int horizon = 8;      // iid/coding: quotients coded each way
    int max_degree = 40;  // entropy / calcintegral truncation
    double quantile = 0.999;
    double tol = 0.01;  // sojourn relative tolerance
    bool bias = false;  // haar: harness self-test (must fail)
};

/// Haar invariance under the Artin map: depth-q^depth cylinder chi-square on
/// the image samples.  With cfg.bias, a coefficient of each tabulated series
/// is forced to a constant: the test must then fail (harness self-test).
Report experiment_haar(const Field& f, const ExperimentConfig& cfg);

/// Bernoulli image: per-index degree marginals within 4 sigma of
/// (q-1) q^-d, pairwise-independence chi-square for lags 1..3, and
/// autocorrelation of the degrees within 4 standard errors.
Report experiment_iid(const Field& f, const ExperimentConfig& cfg);

/// Mean sojourn: empirical mean of 2*deg over nu-draws within cfg.tol of the
/// exact 2q/(q-1).
Report experiment_sojourn(const Field& f, const ExperimentConfig& cfg);

/// Entropy: closed form vs truncated series within the analytic tail bound.
Report experiment_entropy(const Field& f, const ExperimentConfig& cfg);

/// Exact partial sums (1/q)(1 - q^-D) of the mass integral over J.
Report experiment_calcintegral(const Field& f, const ExperimentConfig& cfg);

/// Conformal cocycle: chain rule for the derivative exponent and the exact
/// two-point conformality identity on random group words and series.
Report experiment_cocycle(const Field& f, const ExperimentConfig& cfg);

/// Coding dynamics: shift conjugacy of the quotient coding under the
/// first-return map, the decorated/quotient cross-check, and time reversal
/// (letters of the reversed section vs kappa of the shifted letters,
/// plus the pure sequence-space identities).
Report experiment_coding(const Field& f, const ExperimentConfig& cfg);

/// Tree geometry: geodesic alignment of coded frames, sojourn lengths
/// = 2 deg a_n, the Smith-oracle validation of the distance formula, and
/// right-O-invariance of representatives.
Report experiment_tree(const Field& f, const ExperimentConfig& cfg);

/// Dispatch by experiment name (haar, iid, sojourn, entropy, calcintegral,
/// cocycle, coding, tree).  DomainError on unknown names.
Report run_experiment(const std::string& name, const Field& f, const ExperimentConfig& cfg);

/// Independent elementary-divisor computation: genuine row/column elimination
/// over the valuation ring with exact rational-function arithmetic, returning
/// |e1 - e2|.  The reference oracle for vertex_distance.
int smith_distance_oracle(const std::array<RationalFunction, 4>& m);

}  // namespace modray
