#pragma once

/**
 * @file beta_engine.hpp
 * @brief F_n(x) = B(x+1, n+1) and its x-derivatives of any order.
 *
 * Differentiating F_n(x) r times produces (-1)^r G_r(H_n(x,1), ..., H_n(x,r)) F_n(x)
 * where G_r is an integer polynomial in formal generators h_1..h_r. G_r does not
 * depend on (n, x), so it is built symbolically once per r and evaluated on the
 * harmonic vector afterwards.
 *
 * The recursion producing G_r comes from d/dx F_n = -H_n(x,1) F_n together with
 * d/dx H_n(x,a) = -a H_n(x,a+1):
 *
 *     G_0 = 1,   G_{r+1} = h_1 G_r + sum_a a h_{a+1} dG_r/dh_a.
 *
 * G_r coincides with the complete Bell polynomial B_r(0! h_1, 1! h_2, ..., (r-1)! h_r).
 */

#include "harmonic/harmonic_core.hpp"
#include "harmonic/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace harmonic {

/// Exponents of h_1, h_2, ... (index 0 is h_1); trailing zeros are trimmed.
using Monomial = std::vector<unsigned>;

/// sum a * e_a
unsigned monomial_weight(const Monomial& m);
/// sum e_a
unsigned monomial_degree(const Monomial& m);

/// Ascending degree, then descending exponent vector (h_1 heavy first).
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Integer-coefficient polynomial in h_1, h_2, ...
class HPolynomial {
public:
    using Terms = std::map<Monomial, BigInt, GradedLexLess>;

    HPolynomial() = default;
    static HPolynomial constant(const BigInt& c);
    /// The single generator h_index (1-based).
    static HPolynomial generator(unsigned index);

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Highest generator index appearing.
    unsigned max_generator() const;
    BigInt coefficient(const Monomial& m) const;
    BigInt coefficient_sum() const;
    /// True if every monomial has the given weight.
    bool is_homogeneous(unsigned weight) const;

    void add_term(Monomial m, const BigInt& c);
    HPolynomial& operator+=(const HPolynomial& rhs);
    HPolynomial& operator*=(const BigInt& c);
    friend HPolynomial operator*(const HPolynomial& a, const HPolynomial& b);

    /// d/dh_index
    HPolynomial partial(unsigned index) const;

    /// values[a-1] substitutes h_a.
    Rational evaluate(std::span<const Rational> values) const;
    BigInt evaluate(std::span<const BigInt> values) const;
    double evaluate(std::span<const double> values) const;

    /// "6*h4 + 8*h1*h3 + 3*h2^2 + 6*h1^2*h2 + h1^4"
    std::string str() const;

    friend bool operator==(const HPolynomial&, const HPolynomial&) = default;

private:
    Terms terms_;
};

/// G_r together with its order r.
class BellExpansion {
public:
    BellExpansion() : poly_(HPolynomial::constant(1)) {}

    unsigned order() const { return order_; }
    const HPolynomial& polynomial() const { return poly_; }
    const HPolynomial::Terms& terms() const { return poly_.terms(); }

    /// G_{r+1} from G_r.
    BellExpansion next() const;

    /// Requires hv.order() >= order().
    Rational evaluate(const HarmonicVector& hv) const;

    std::string str() const { return poly_.str(); }

private:
    unsigned order_ = 0;
    HPolynomial poly_;
};

/// Cached G_r; the reference stays valid for the life of the program.
const BellExpansion& bell_expansion(unsigned r);

/// n! / prod_{k=0}^{n} (x+k+1), for x > -1.
Rational beta_F(std::uint64_t n, const Rational& x);

/// sum_k C(n,k) (-1)^k / (x+k+1).
Rational beta_F_sum(std::uint64_t n, const Rational& x);

/// sum_k C(n,k) (-1)^k / (x+k+1)^r, r >= 1.
Rational alt_power_sum(std::uint64_t n, const Rational& x, unsigned r);

/// r-th x-derivative of F_n at x, i.e. the integral of (1-t)^n (log t)^r t^x over [0,1].
Rational derivative_F(std::uint64_t n, const Rational& x, unsigned r);

/// Same, reusing a harmonic vector of order >= r and the value F = beta_F(hv.n, hv.x).
Rational derivative_F(const HarmonicVector& hv, const Rational& F, unsigned r);

} // namespace harmonic
