#pragma once

// Harmonic numbers, generalized harmonic functions, binomials and
// Bernoulli numbers over exact rationals.

#include "harmonic/rational.hpp"

#include <cstdint>
#include <vector>

namespace harmonic {

/// C(n, k); zero when k lies outside 0..n.
BigInt binomial(std::uint64_t n, std::int64_t k);

/// Generalized binomial top*(top-1)*...*(top-k+1)/k! for rational top.
Rational generalized_binomial(const Rational& top, unsigned k);

/// Throws std::domain_error unless x > -1.
void require_beta_domain(const Rational& x);

/// H_n^(alpha) = sum_{k=1}^{n} 1/k^alpha, with H_0^(alpha) = 0.
/// Throws std::invalid_argument for alpha == 0.
Rational harmonic_number(std::uint64_t n, unsigned alpha);

/// H_n(x, alpha) = sum_{k=0}^{n} 1/(k+x+1)^alpha for x > -1.
Rational harmonic_function(std::uint64_t n, const Rational& x, unsigned alpha);

/// (H_n(x,1), ..., H_n(x,r)) for one (n, x).
struct HarmonicVector {
    std::uint64_t n = 0;
    Rational x;
    std::vector<Rational> values;

    unsigned order() const { return static_cast<unsigned>(values.size()); }
    /// 1-based: at(1) is H_n(x,1).
    const Rational& at(unsigned alpha) const { return values.at(alpha - 1); }
};

HarmonicVector harmonic_vector(std::uint64_t n, const Rational& x, unsigned r);

struct BernoulliTable {
    std::vector<Rational> values;

    std::size_t size() const { return values.size(); }
    const Rational& operator[](std::size_t i) const { return values.at(i); }
};

/// B_0..B_N with B_1 = -1/2.
BernoulliTable bernoulli_table(unsigned N);

/// The rational c with zeta(2n) = c * pi^(2n). Requires n >= 1.
Rational zeta_even_coefficient(unsigned n);

} // namespace harmonic
