#pragma once

// Floating-point cross-checks that reach the log-moment integrals and the
// unit-cube integral without going through the exact engine.

#include "harmonic/rational.hpp"
#include "harmonic/report.hpp"

#include <cstdint>
#include <string>

namespace harmonic {

struct QuadratureResult {
    double value = 0.0;
    /// The scheme's own estimate; not a rigorous bound.
    double abs_error_estimate = 0.0;
    std::uint64_t evaluations = 0;
    bool converged = false;
    /// Truncation point of the u-integral.
    double upper_limit = 0.0;
};

/// Evaluation cap shared by every quadrature call.
inline constexpr std::uint64_t kQuadratureEvaluationCap = 1'000'000;

/// int_0^1 (1-t)^n (log t)^m t^x dt, computed as
/// (-1)^m int_0^inf (1-e^-u)^n u^m e^-(x+1)u du on [0, U] by adaptive
/// Gauss-Kronrod 7/15, with U grown until the envelope tail
/// int_U^inf u^m e^-(x+1)u du drops below 1e-14 |value|.
/// Throws std::domain_error for x <= -1; non-convergence is flagged in the result.
QuadratureResult log_moment_quadrature(std::uint64_t n, unsigned m, const Rational& x);

struct MonteCarloResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string generator;
};

/// Samples per independently seeded batch.
inline constexpr std::uint64_t kMonteCarloBatch = 65'536;

/// Plain Monte Carlo for the integral of (1 - x_1...x_r)^n over the unit r-cube.
/// Batch b draws from mt19937_64 seeded with splitmix64(seed, b), so the
/// result is bit-identical for a given (n, r, samples, seed) regardless of
/// thread count. Requires samples >= 2 and r >= 1.
MonteCarloResult cube_monte_carlo(std::uint64_t n, unsigned r, std::uint64_t samples, std::uint64_t seed);

/// "lemma2.1a-quad": quadrature against derivative_F at relative tolerance.
IdentityReport quadrature_report(std::uint64_t n, unsigned m, const Rational& x, double rel_tol = 1e-9);

/// "lemma2.1c-mc": estimate within k_sigma standard errors of multi_integral_exact.
IdentityReport monte_carlo_report(std::uint64_t n, unsigned r, std::uint64_t samples, std::uint64_t seed,
                                  double k_sigma = 4.0);

} // namespace harmonic
