#pragma once

/**
 * @file series_lab.hpp
 * @brief Partial sums with rigorous tail brackets for the infinite-series claims.
 *
 * A SeriesEstimate states that the true limit lies in
 * [partial + tail_low, partial + tail_high]. Claimed limits are either exact
 * rationals or coeff * pi^k kept symbolic until comparison.
 *
 * Exact partial sums of harmonic-polynomial series run over the common
 * denominator lcm(1..n+1)^(w+1) (w = polynomial weight), so each step is
 * integer multiply/add with no gcd; the result is reduced once at the end.
 */

#include "harmonic/beta_engine.hpp"
#include "harmonic/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace harmonic {

/// Default cap on N for exact rational accumulation at the CLI.
inline constexpr std::uint64_t kExactTermLimit = 10'000;

enum class SeriesMode { exact, floating };

struct PiPower {
    Rational coeff;
    int pi_power = 0;

    long double value() const;
};

using ClaimedLimit = std::variant<Rational, PiPower>;

long double to_long_double(const ClaimedLimit& limit);

struct SeriesEstimate {
    std::string target_id;
    std::uint64_t N = 0;
    std::variant<Rational, double> partial;
    bool exact = true;
    Rational tail_low;
    Rational tail_high;
    std::optional<ClaimedLimit> claimed_limit;

    double partial_value() const;
    /// Valid only when exact.
    const Rational& exact_partial() const { return std::get<Rational>(partial); }

    /// Whether the claimed limit lies in [partial + tail_low, partial + tail_high].
    /// Exact for rational claims on exact partials; otherwise compared in long
    /// double with slack tolerance * max(1, |limit|) at each edge.
    bool brackets_claim(double tolerance = 1e-12) const;
    /// tail_high - tail_low
    Rational width() const { return tail_high - tail_low; }
};

std::string to_json(const SeriesEstimate& estimate);

/// sum_{n=0}^{N-1} (n+x+1)^(-s) with the integral-comparison tail bracket.
/// claimed_limit is coeff * pi^s when x = 0 and s is even, otherwise absent.
SeriesEstimate hurwitz_partial(const Rational& x, int s, std::uint64_t N,
                               SeriesMode mode = SeriesMode::exact);

/// sum_{n=1}^{N} (1/n) sum_k C(n,k)(-1)^k/(k+1)^r; claimed limit r.
SeriesEstimate lemma_c_partial(unsigned r, std::uint64_t N, SeriesMode mode = SeriesMode::exact);

/// Numerators G_2, G_3, G_4 over n(n+1); claimed limits 3!, 4!, 5!.
enum class CorollaryVariant { r3, r4, r5 };

SeriesEstimate corollary_2_4_partial(CorollaryVariant variant, std::uint64_t N,
                                     SeriesMode mode = SeriesMode::exact);

/// sum_l C(r,l) l! (-1)^l sum_{n=1}^{N} (1/n) H_{n+1}^(l+1) F_n^(r-l)(0);
/// claimed limit (-1)^r (r+2)!.
SeriesEstimate eq32_partial(unsigned r, std::uint64_t N, SeriesMode mode = SeriesMode::exact);

struct Theorem26Series {
    /// Outer sum over n < N of the inverted double sum; tends to zeta(x+1, r+2).
    SeriesEstimate eq31;
    SeriesEstimate eq32;
    /// Every inner sum equalled 1/(n+x+1)^(r+2), so eq31 matches hurwitz_partial term by term.
    bool eq31_matches_hurwitz = false;
};

Theorem26Series theorem_2_6_series(unsigned r, const Rational& x, std::uint64_t N);

/// Integral of (1 - x_1...x_r)^n over the unit r-cube.
Rational multi_integral_exact(std::uint64_t n, unsigned r);

/// sum_{n=1}^{N} P(H_{n+1}^(1), ..., H_{n+1}^(w)) / (n(n+1)) for P homogeneous of weight w.
Rational harmonic_polynomial_series(const HPolynomial& p, unsigned weight, std::uint64_t N);
double harmonic_polynomial_series_float(const HPolynomial& p, std::uint64_t N);

/// Upper bound on the remainder sum_{n>N} of the series above, for P with
/// nonnegative coefficients. Uses H_m <= 1 + ln m and H_m^(a) <= zeta(a).
Rational harmonic_polynomial_tail_bound(const HPolynomial& p, std::uint64_t N);

} // namespace harmonic
