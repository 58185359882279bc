#pragma once

/**
 * @file identity_suite.hpp
 * @brief Binomial inversion and exact sweeps over the finite identities.
 *
 * Every check returns one IdentityReport per grid point, sorted by (n, x, r)
 * within each identity. Failures are recorded, never thrown. Identities that
 * only hold at x = 0 (the harmonic-number forms) are reported with x = 0.
 *
 * Identity ids:
 *   beta forms:          eq13-14, eq13-binom
 *   derivatives:         lemma2.1a, lemma2.1b
 *   order-2 sums:        eq15, eq16, thm2.2a, thm2.2b
 *   order-3/4 sums:      thm2.3a..thm2.3d, eq20, eq21
 *   order-5 sums:        eq28a, eq28b, eq29a, eq29b, thm2.5a, thm2.5b
 *   general order r + 2: thm2.6-finite
 *   inversion:           inversion-r1..inversion-r5, inversion-involution
 */

#include "harmonic/rational.hpp"
#include "harmonic/report.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace harmonic {

/// b_n = sum_{k=0}^{n} C(n,k) (-1)^k a_k. Applying it twice returns the input.
std::vector<Rational> binomial_inverse(std::span<const Rational> a);

using Evaluator = std::function<Rational(const GridPoint&)>;

/// Exact lhs == rhs at every grid point. An evaluator throwing std::domain_error
/// or std::invalid_argument marks the point skipped, with the message as reason.
std::vector<IdentityReport> generic_check(const std::string& identity_id, const Evaluator& lhs,
                                          const Evaluator& rhs, std::span<const GridPoint> grid);

/// Every (n, x) with n <= n_max, optionally crossed with r in [r_min, r_max].
std::vector<GridPoint> make_grid(std::uint64_t n_max, std::span<const Rational> xs);
std::vector<GridPoint> make_grid(std::uint64_t n_max, std::span<const Rational> xs, unsigned r_min,
                                 unsigned r_max);

struct SweepConfig {
    std::uint64_t n_max = 50;
    unsigned r_max = 6;
    std::vector<Rational> xs;

    /// n <= 50, r <= 6, x in {0, 1/2, 1, 7/3, -49/100}.
    static SweepConfig defaults();
};

std::vector<IdentityReport> check_beta_equality(std::uint64_t n_max, std::span<const Rational> xs);
std::vector<IdentityReport> check_lemma_a(std::uint64_t n_max, unsigned r_max,
                                          std::span<const Rational> xs);
std::vector<IdentityReport> check_theorem_2_2(std::uint64_t n_max, std::span<const Rational> xs);
std::vector<IdentityReport> check_theorem_2_3(std::uint64_t n_max, std::span<const Rational> xs);
std::vector<IdentityReport> check_theorem_2_5(std::uint64_t n_max, std::span<const Rational> xs);
std::vector<IdentityReport> check_theorem_2_6_finite(unsigned r_max, std::uint64_t n_max,
                                                     std::span<const Rational> xs);
/// Forward forms pushed through binomial_inverse must give 1/(n+x+1)^r (r = 1..5),
/// plus seeded involution trials of every length up to n_max + 1.
std::vector<IdentityReport> check_inversion(std::uint64_t n_max, std::span<const Rational> xs);

/// All of the above.
std::vector<IdentityReport> check_all(const SweepConfig& config);

} // namespace harmonic
