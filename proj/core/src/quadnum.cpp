#include "cforge/quadnum.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cforge {

namespace mp = boost::multiprecision;

std::pair<BigInt, BigInt> squarefree_decompose(const BigInt& n) {
    if (n < 1) {
        throw math_error("squarefree_decompose requires n >= 1");
    }
    BigInt s = 1;
    BigInt m = 1;
    BigInt rest = n;
    for (BigInt p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        unsigned long e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (unsigned long i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) m *= p;
    }
    m *= rest; // leftover prime (exponent 1)
    return {s, m};
}

QuadNum::QuadNum(Rational a, Rational b, const BigInt& d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d < 1) {
        throw math_error("radicand must be a positive integer");
    }
    auto [s, m] = squarefree_decompose(d);
    if (s != 1) {
        b_ *= Rational(s);
        d_ = m;
    }
    canonicalize();
}

QuadNum QuadNum::sqrt_of(const BigInt& n) {
    if (n.is_zero()) return QuadNum(0);
    return QuadNum(Rational(0), Rational(1), n);
}

void QuadNum::canonicalize() {
    if (d_ == 1) {
        // sqrt(1) folds into the rational part.
        a_ += b_;
        b_ = Rational(0);
    } else if (b_.is_zero()) {
        d_ = 1;
    }
}

const BigInt& QuadNum::merged_disc(const QuadNum& u, const QuadNum& v) {
    if (u.d_ == v.d_) return u.d_;
    if (u.is_rational()) return v.d_;
    if (v.is_rational()) return u.d_;
    throw math_error("radicand mismatch: sqrt(" + u.d_.str() + ") vs sqrt(" + v.d_.str() + ")");
}

int QuadNum::sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    auto ord = lhs <=> rhs;
    if (ord == std::strong_ordering::equal) return 0; // impossible for squarefree d > 1
    bool rational_part_dominates = ord == std::strong_ordering::greater;
    return rational_part_dominates ? sa : sb;
}

QuadNum QuadNum::abs() const { return sign() < 0 ? -*this : *this; }

Rational QuadNum::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadNum QuadNum::conjugate() const {
    QuadNum r = *this;
    r.b_ = -r.b_;
    r.canonicalize();
    return r;
}

QuadNum QuadNum::inverse() const {
    if (is_zero()) {
        throw math_error("division by zero in Q(sqrt(d))");
    }
    Rational n = norm();
    QuadNum r = conjugate();
    r.a_ /= n;
    r.b_ /= n;
    r.canonicalize();
    return r;
}

QuadNum QuadNum::operator-() const {
    QuadNum r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
    d_ = merged_disc(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    canonicalize();
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
    d_ = merged_disc(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    canonicalize();
    return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
    const BigInt d = merged_disc(*this, o);
    Rational na = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    d_ = d;
    canonicalize();
    return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) { return *this *= o.inverse(); }

QuadNum QuadNum::pow(unsigned long e) const {
    QuadNum base = *this;
    QuadNum acc = 1;
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

double QuadNum::to_double() const {
    using Big = mp::cpp_bin_float_50;
    Big av = Big(a_.num()) / Big(a_.den());
    if (b_.is_zero()) return static_cast<double>(av);
    Big bv = Big(b_.num()) / Big(b_.den());
    Big root = sqrt(Big(d_));
    return static_cast<double>(av + bv * root);
}

std::string QuadNum::str() const {
    if (is_rational()) return a_.str();
    return a_.str() + " + " + b_.str() + "*sqrt(" + d_.str() + ")";
}

QuadNum QuadNum::parse(std::string_view text) {
    auto plus = text.find(" + ");
    if (plus == std::string_view::npos) {
        return QuadNum(Rational::parse(text));
    }
    Rational a = Rational::parse(text.substr(0, plus));
    std::string_view rest = text.substr(plus + 3);
    auto star = rest.find("*sqrt(");
    if (star == std::string_view::npos || rest.back() != ')') {
        throw format_error("bad quadratic literal '" + std::string(text) + "'");
    }
    Rational b = Rational::parse(rest.substr(0, star));
    std::string_view dtext = rest.substr(star + 6, rest.size() - star - 7);
    BigInt d;
    try {
        d = BigInt(std::string(dtext));
    } catch (const std::runtime_error&) {
        throw format_error("bad radicand in '" + std::string(text) + "'");
    }
    return QuadNum(std::move(a), std::move(b), d);
}

int compare(const QuadNum& u, const QuadNum& v) { return (u - v).sign(); }

} // namespace cforge
