#include "cforge/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <utility>

namespace cforge {

namespace mp = boost::multiprecision;

BigInt big_gcd(const BigInt& a, const BigInt& b) { return mp::gcd(a, b); }

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw math_error("rational with zero denominator");
    }
    reduce();
}

void Rational::reduce() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::abs() const { return num_.sign() < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw math_error("rational division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Cross-multiply; denominators are positive.
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(unsigned long e) const {
    Rational base = *this;
    Rational acc = 1;
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

double Rational::to_double() const {
    // Route through a 50-digit float so the final rounding to double is the
    // only rounding that matters.
    using Big = mp::cpp_bin_float_50;
    Big n(num_);
    Big d(den_);
    return static_cast<double>(n / d);
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(text)));
        }
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        return Rational(std::move(num), std::move(den));
    } catch (const std::runtime_error& e) {
        throw format_error("bad rational literal '" + std::string(text) + "'");
    }
}

} // namespace cforge
