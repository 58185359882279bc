#include "harmonic/harmonic_core.hpp"

#include <doctest.h>

#include <gmpxx.h>

#include <stdexcept>

using namespace harmonic;

namespace {

// Reference sum straight on mpq_class, sharing no code with the library.
mpq_class brute_harmonic(unsigned long n, const mpq_class& x, unsigned alpha)
{
    mpq_class sum = 0;
    for (unsigned long k = 0; k <= n; ++k) {
        mpq_class base = mpq_class(k + 1) + x;
        mpq_class term = 1;
        for (unsigned a = 0; a < alpha; ++a)
            term /= base;
        sum += term;
    }
    return sum;
}

Rational wrap(const mpq_class& q)
{
    return Rational(q.get_num(), q.get_den());
}

} // namespace

TEST_CASE("binomial")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(4, 6) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("generalized binomial")
{
    CHECK(generalized_binomial(Rational(5), 2) == Rational(10));
    CHECK(generalized_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(generalized_binomial(Rational(7, 3), 0) == Rational(1));
}

TEST_CASE("harmonic numbers")
{
    CHECK(harmonic_number(0, 3) == Rational(0));
    CHECK(harmonic_number(3, 1) == Rational(11, 6));
    CHECK(harmonic_number(2, 2) == Rational(5, 4));
    CHECK_THROWS_AS(harmonic_number(3, 0), std::invalid_argument);
}

TEST_CASE("harmonic function")
{
    CHECK(harmonic_function(0, Rational(1, 2), 2) == Rational(4, 9));
    CHECK(harmonic_function(2, Rational(1), 1) == Rational(13, 12));
    CHECK_THROWS_AS(harmonic_function(2, Rational(-1), 1), std::domain_error);
    CHECK_THROWS_AS(harmonic_function(2, Rational(-3, 2), 1), std::domain_error);

    for (const char* xs : {"0", "1/2", "7/3", "-49/100", "5"}) {
        const Rational x = Rational::parse(xs);
        const mpq_class xq(xs);
        for (unsigned long n = 0; n <= 20; ++n)
            for (unsigned alpha = 1; alpha <= 4; ++alpha)
                CHECK(harmonic_function(n, x, alpha) == wrap(brute_harmonic(n, xq, alpha)));
    }
}

TEST_CASE("shift identity: H_n(0, a) = H_{n+1}^(a)")
{
    for (unsigned long n = 0; n <= 100; ++n)
        for (unsigned alpha = 1; alpha <= 6; ++alpha)
            REQUIRE(harmonic_function(n, Rational(0), alpha) == harmonic_number(n + 1, alpha));
}

TEST_CASE("telescoping: H_n(x,a) - H_{n-1}(x,a) = 1/(n+x+1)^a")
{
    for (const char* xs : {"0", "1/2", "1", "7/3", "-49/100"}) {
        const Rational x = Rational::parse(xs);
        for (unsigned long n = 1; n <= 40; ++n)
            for (unsigned alpha = 1; alpha <= 5; ++alpha)
                REQUIRE(harmonic_function(n, x, alpha) - harmonic_function(n - 1, x, alpha)
                        == (Rational(static_cast<long>(n + 1)) + x).pow(-static_cast<int>(alpha)));
    }
}

TEST_CASE("harmonic vector")
{
    const HarmonicVector a = harmonic_vector(1, Rational(0), 2);
    REQUIRE(a.order() == 2);
    CHECK(a.at(1) == Rational(3, 2));
    CHECK(a.at(2) == Rational(5, 4));

    const HarmonicVector b = harmonic_vector(0, Rational(0), 3);
    CHECK(b.values == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});

    // 2/3 + 2/5 + 2/7 by hand.
    CHECK(harmonic_vector(2, Rational(1, 2), 1).at(1) == Rational(142, 105));

    const HarmonicVector c = harmonic_vector(9, Rational(7, 3), 6);
    for (unsigned alpha = 1; alpha <= 6; ++alpha)
        CHECK(c.at(alpha) == harmonic_function(9, Rational(7, 3), alpha));

    CHECK_THROWS(harmonic_vector(2, Rational(0), 0));
}

TEST_CASE("Bernoulli numbers")
{
    const BernoulliTable t = bernoulli_table(40);
    REQUIRE(t.size() == 41);
    CHECK(t[0] == Rational(1));
    CHECK(t[1] == Rational(-1, 2));
    CHECK(t[2] == Rational(1, 6));
    CHECK(t[4] == Rational(-1, 30));
    CHECK(t[6] == Rational(1, 42));
    CHECK(t[8] == Rational(-1, 30));
    CHECK(t[12] == Rational(-691, 2730));
    for (unsigned k = 1; k <= 19; ++k)
        CHECK(t[2 * k + 1] == Rational(0));
    // B_{2k} alternates in sign.
    for (unsigned k = 1; k <= 20; ++k)
        CHECK(t[2 * k].sign() == (k % 2 == 1 ? 1 : -1));
}

TEST_CASE("zeta even coefficients")
{
    CHECK(zeta_even_coefficient(1) == Rational(1, 6));
    CHECK(zeta_even_coefficient(2) == Rational(1, 90));
    CHECK(zeta_even_coefficient(3) == Rational(1, 945));
    CHECK(zeta_even_coefficient(4) == Rational(1, 9450));
    for (unsigned n = 1; n <= 20; ++n)
        CHECK(zeta_even_coefficient(n) > Rational(0));
    CHECK_THROWS(zeta_even_coefficient(0));
}
