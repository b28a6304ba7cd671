#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

#include "cforge/errors.hpp"

namespace cforge {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, always stored reduced with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}          // NOLINT: implicit on purpose
    Rational(BigInt n) : num_(std::move(n)) {}  // NOLINT
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    /// -1, 0 or +1.
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational abs() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational pow(unsigned long e) const;

    /// Correctly rounded double approximation.
    double to_double() const;

    /// Canonical text "p/q", sign folded into the numerator.
    std::string str() const;
    /// Parses "p", "-p" or "p/q". Throws format_error on anything else.
    static Rational parse(std::string_view text);

private:
    void reduce();

    BigInt num_{0};
    BigInt den_{1};
};

/// gcd helper over BigInt, exposed because callers need lcm-style clearing.
BigInt big_gcd(const BigInt& a, const BigInt& b);

} // namespace cforge
