#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cforge/quadnum.hpp"

namespace cforge {

/// Dense square matrix over Q(sqrt(d)). All entries must live over one
/// radicand (purely rational entries are compatible with any radicand).
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t order);
    static ExactMatrix identity(std::size_t order);
    static ExactMatrix ones(std::size_t order);
    static ExactMatrix scalar(std::size_t order, const QuadNum& w);
    static ExactMatrix from_rows(const std::vector<std::vector<QuadNum>>& rows);

    std::size_t order() const { return n_; }

    QuadNum& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const QuadNum& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    /// Common radicand of the entries (1 when all rational). Throws
    /// math_error if two distinct irrational radicands appear.
    BigInt disc() const;

    ExactMatrix transpose() const;
    bool is_symmetric() const;

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix scaled(const QuadNum& c) const;

    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
        return x.n_ == y.n_ && x.e_ == y.e_;
    }

private:
    std::size_t n_;
    std::vector<QuadNum> e_;
};

/// M * M^T, exact. Symmetric by construction.
ExactMatrix gram(const ExactMatrix& m);

/// Exact determinant: row denominators cleared, then fraction-free Bareiss
/// elimination over Z[sqrt(d)]. Pivot is the first nonzero entry scanning the
/// column top-down; swaps tracked in the sign.
QuadNum det(const ExactMatrix& m);

/// The weight w when m == w*I, otherwise empty. The zero matrix matches w=0.
std::optional<QuadNum> match_scalar_identity(const ExactMatrix& m);

struct IdentityOnesSplit {
    QuadNum a; // coefficient of I
    QuadNum b; // coefficient of J
};

/// (a, b) when m == a*I + b*J, otherwise empty. For order 1 the split is
/// normalized to b = 0.
std::optional<IdentityOnesSplit> match_identity_plus_ones(const ExactMatrix& m);

} // namespace cforge
