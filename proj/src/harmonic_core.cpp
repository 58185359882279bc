#include "harmonic/harmonic_core.hpp"

#include <stdexcept>
#include <string>

namespace harmonic {

BigInt binomial(std::uint64_t n, std::int64_t k)
{
    if (k < 0 || static_cast<std::uint64_t>(k) > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
    return out;
}

Rational generalized_binomial(const Rational& top, unsigned k)
{
    Rational out = 1;
    for (unsigned i = 0; i < k; ++i)
        out *= top - Rational(i);
    return out / Rational(factorial(k));
}

void require_beta_domain(const Rational& x)
{
    if (x <= Rational(-1))
        throw std::domain_error("x must satisfy x > -1, got " + x.str());
}

Rational harmonic_number(std::uint64_t n, unsigned alpha)
{
    if (alpha == 0)
        throw std::invalid_argument("harmonic number order must be positive");
    Rational sum;
    for (std::uint64_t k = 1; k <= n; ++k)
        sum += Rational(BigInt(1), BigInt(static_cast<unsigned long>(k))).pow(static_cast<int>(alpha));
    return sum;
}

Rational harmonic_function(std::uint64_t n, const Rational& x, unsigned alpha)
{
    if (alpha == 0)
        throw std::invalid_argument("harmonic function order must be positive");
    require_beta_domain(x);
    Rational sum;
    for (std::uint64_t k = 0; k <= n; ++k)
        sum += (x + Rational(k + 1)).pow(-static_cast<int>(alpha));
    return sum;
}

HarmonicVector harmonic_vector(std::uint64_t n, const Rational& x, unsigned r)
{
    if (r == 0)
        throw std::invalid_argument("harmonic vector order must be positive");
    require_beta_domain(x);
    HarmonicVector out{n, x, std::vector<Rational>(r)};
    for (std::uint64_t k = 0; k <= n; ++k) {
        const Rational base = (x + Rational(k + 1)).inverse();
        Rational power = base;
        for (unsigned a = 0; a < r; ++a) {
            out.values[a] += power;
            if (a + 1 < r)
                power *= base;
        }
    }
    return out;
}

BernoulliTable bernoulli_table(unsigned N)
{
    BernoulliTable table;
    table.values.reserve(N + 1);
    table.values.emplace_back(1);
    // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m = -(1/(m+1)) sum_{k<m} C(m+1,k) B_k
    for (unsigned m = 1; m <= N; ++m) {
        Rational acc;
        for (unsigned k = 0; k < m; ++k)
            if (!table.values[k].is_zero())
                acc += Rational(binomial(m + 1, k)) * table.values[k];
        table.values.push_back(-acc / Rational(m + 1));
    }
    return table;
}

Rational zeta_even_coefficient(unsigned n)
{
    if (n == 0)
        throw std::invalid_argument("zeta_even_coefficient requires n >= 1");
    const BernoulliTable table = bernoulli_table(2 * n);
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * n);
    Rational c = table[2 * n] * Rational(two_pow) / (Rational(2) * Rational(factorial(2 * n)));
    return (n % 2 == 1) ? c : -c;
}

} // namespace harmonic
