#include "harmonic/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace harmonic {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("not a rational of the form p/q: '" + std::string(text) + "'");
    BigInt p(std::string(num), 10);
    BigInt q(std::string(den), 10);
    if (q == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    if (negative)
        p = -p;
    return Rational(p, q);
}

Rational Rational::from_double(double v)
{
    if (!std::isfinite(v))
        throw std::domain_error("cannot represent a non-finite double as a rational");
    return Rational(mpq_class(v));
}

std::string Rational::str() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(int exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // powers of coprime integers stay coprime
    mpq_class out;
    out.get_num() = std::move(num);
    out.get_den() = std::move(den);
    return Rational(std::move(out));
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.str();
}

BigInt factorial(unsigned n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

} // namespace harmonic
