#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar used by every computation in the library.
 *
 * Values are kept in lowest terms with a positive denominator, so two
 * equal numbers always have identical numerator/denominator pairs and
 * identical text forms ("p/q", or just "p" when q = 1).
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace harmonic {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<T>)
            value_ = static_cast<long>(v);
        else
            value_ = static_cast<unsigned long>(v);
    }

    Rational(const BigInt& v) : value_(v) {} // NOLINT(google-explicit-constructor)

    /// Throws std::domain_error when den == 0.
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p/q" or "p" (optional leading '-'); q must be a positive integer.
    /// Non-reduced input is accepted and reduced. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    /// Exact value of a finite double.
    static Rational from_double(double v);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    double to_double() const { return value_.get_d(); }
    std::string str() const;

    Rational inverse() const;
    Rational pow(int exponent) const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

BigInt factorial(unsigned n);

} // namespace harmonic
