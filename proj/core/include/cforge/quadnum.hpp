#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "cforge/rational.hpp"

namespace cforge {

/// Splits n >= 1 into (s, m) with n = s^2 * m and m squarefree.
std::pair<BigInt, BigInt> squarefree_decompose(const BigInt& n);

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// d is a squarefree positive integer; d == 1 is the canonical encoding of a
/// purely rational value (then b == 0). Values over distinct irrational
/// radicands do not mix; arithmetic between them throws math_error.
/// Comparisons are exact -- sign analysis over the components, never floats.
class QuadNum {
public:
    QuadNum() = default;
    QuadNum(long long n) : a_(n) {}      // NOLINT: implicit on purpose
    QuadNum(Rational r) : a_(std::move(r)) {}  // NOLINT
    /// a + b*sqrt(d). d need not be squarefree; sqrt(s^2 m) folds s into b.
    QuadNum(Rational a, Rational b, const BigInt& d);

    /// sqrt(n) for n >= 0, stored over the squarefree part of n.
    static QuadNum sqrt_of(const BigInt& n);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const BigInt& disc() const { return d_; }

    bool is_rational() const { return d_ == 1; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Exact sign: -1, 0 or +1.
    int sign() const;
    QuadNum abs() const;

    /// Field norm a^2 - b^2 d; zero iff the value is zero.
    Rational norm() const;
    /// a - b*sqrt(d).
    QuadNum conjugate() const;
    /// Multiplicative inverse; throws math_error on zero.
    QuadNum inverse() const;

    QuadNum operator-() const;
    QuadNum& operator+=(const QuadNum& o);
    QuadNum& operator-=(const QuadNum& o);
    QuadNum& operator*=(const QuadNum& o);
    QuadNum& operator/=(const QuadNum& o);

    friend QuadNum operator+(QuadNum u, const QuadNum& v) { return u += v; }
    friend QuadNum operator-(QuadNum u, const QuadNum& v) { return u -= v; }
    friend QuadNum operator*(QuadNum u, const QuadNum& v) { return u *= v; }
    friend QuadNum operator/(QuadNum u, const QuadNum& v) { return u /= v; }

    /// Componentwise equality; sound because sqrt(d) is irrational for d > 1.
    friend bool operator==(const QuadNum& u, const QuadNum& v) {
        return u.d_ == v.d_ && u.a_ == v.a_ && u.b_ == v.b_;
    }
    friend std::strong_ordering operator<=>(const QuadNum& u, const QuadNum& v) {
        int s = (u - v).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    QuadNum pow(unsigned long e) const;

    double to_double() const;

    /// Canonical text: "p/q" when b == 0, else "p/q + r/s*sqrt(d)" with signs
    /// folded into the numerators.
    std::string str() const;
    static QuadNum parse(std::string_view text);

private:
    void canonicalize();
    /// Radicand the result of combining u and v lives over.
    static const BigInt& merged_disc(const QuadNum& u, const QuadNum& v);

    Rational a_{0};
    Rational b_{0};
    BigInt d_{1};
};

/// Exact three-way comparison, -1 / 0 / +1.
int compare(const QuadNum& u, const QuadNum& v);

} // namespace cforge
