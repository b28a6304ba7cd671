#include "cforge/exact_matrix.hpp"

#include <utility>

namespace cforge {

ExactMatrix::ExactMatrix(std::size_t order) : n_(order), e_(order * order) {
    if (order == 0) {
        throw math_error("matrix order must be positive");
    }
}

ExactMatrix ExactMatrix::identity(std::size_t order) {
    ExactMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::ones(std::size_t order) {
    ExactMatrix m(order);
    for (auto& e : m.e_) e = 1;
    return m;
}

ExactMatrix ExactMatrix::scalar(std::size_t order, const QuadNum& w) {
    ExactMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = w;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<QuadNum>>& rows) {
    ExactMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw math_error("matrix must be square");
        }
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

BigInt ExactMatrix::disc() const {
    BigInt d = 1;
    for (const auto& e : e_) {
        if (e.is_rational()) continue;
        if (d == 1) {
            d = e.disc();
        } else if (d != e.disc()) {
            throw math_error("matrix mixes radicands sqrt(" + d.str() + ") and sqrt(" +
                             e.disc().str() + ")");
        }
    }
    return d;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool ExactMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (n_ != o.n_) {
        throw math_error("order mismatch in matrix product");
    }
    ExactMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            QuadNum s = 0;
            for (std::size_t k = 0; k < n_; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = std::move(s);
        }
    }
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (n_ != o.n_) {
        throw math_error("order mismatch in matrix sum");
    }
    ExactMatrix r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::scaled(const QuadNum& c) const {
    ExactMatrix r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

ExactMatrix gram(const ExactMatrix& m) {
    const std::size_t n = m.order();
    ExactMatrix g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            QuadNum s = 0;
            for (std::size_t k = 0; k < n; ++k) s += m(i, k) * m(j, k);
            g(j, i) = s;
            g(i, j) = std::move(s);
        }
    }
    return g;
}

namespace {

// Fraction-free Bareiss elimination over an exact scalar type. Entries must
// be integral (BigInt, or QuadNum with integer components) so every division
// is exact. Returns the determinant of the working matrix.
template <typename T>
T bareiss_det(std::vector<T>& a, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
    int sign = 1;
    T prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // First nonzero entry in column k, scanning top-down.
        std::size_t pivot_row = k;
        while (pivot_row < n && at(pivot_row, k) == T(0)) ++pivot_row;
        if (pivot_row == n) return T(0);
        if (pivot_row != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(pivot_row, j));
            sign = -sign;
        }
        const T pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                at(i, j) = (at(i, j) * pivot - at(i, k) * at(k, j)) / prev_pivot;
            }
            at(i, k) = T(0);
        }
        prev_pivot = pivot;
    }
    T d = at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

} // namespace

QuadNum det(const ExactMatrix& m) {
    const std::size_t n = m.order();
    const BigInt d = m.disc(); // also validates radicand coherence

    // Clear denominators row by row; det scales by the product of clearers.
    BigInt scale = 1;
    std::vector<QuadNum> work;
    work.reserve(n * n);
    bool all_rational = true;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const QuadNum& e = m(i, j);
            l = l / big_gcd(l, e.a().den()) * e.a().den();
            l = l / big_gcd(l, e.b().den()) * e.b().den();
        }
        const QuadNum factor{Rational(l)};
        for (std::size_t j = 0; j < n; ++j) {
            QuadNum cleared = m(i, j) * factor;
            if (!cleared.is_rational()) all_rational = false;
            work.push_back(std::move(cleared));
        }
        scale *= l;
    }

    if (all_rational) {
        // Integer fast path: Bareiss over BigInt.
        std::vector<BigInt> ints;
        ints.reserve(n * n);
        for (const auto& e : work) ints.push_back(e.a().num());
        BigInt dv = bareiss_det(ints, n);
        return QuadNum(Rational(std::move(dv), scale));
    }

    QuadNum dv = bareiss_det(work, n);
    return dv / QuadNum(Rational(scale));
}

std::optional<QuadNum> match_scalar_identity(const ExactMatrix& m) {
    const std::size_t n = m.order();
    const QuadNum& w = m(0, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j ? m(i, j) != w : !m(i, j).is_zero()) return std::nullopt;
        }
    }
    return w;
}

std::optional<IdentityOnesSplit> match_identity_plus_ones(const ExactMatrix& m) {
    const std::size_t n = m.order();
    if (n == 1) return IdentityOnesSplit{m(0, 0), QuadNum(0)};
    const QuadNum& diag = m(0, 0);
    const QuadNum& off = m(0, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j) != (i == j ? diag : off)) return std::nullopt;
        }
    }
    return IdentityOnesSplit{diag - off, off};
}

} // namespace cforge
