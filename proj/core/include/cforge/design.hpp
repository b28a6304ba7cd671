#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cforge/exact_matrix.hpp"

namespace cforge {

/// Deterministic trial-division primality test.
bool is_prime(std::size_t n);

struct DesignParams {
    std::size_t v = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;

    friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// Verified SBIBD incidence matrix: v x v over {0,1}, k ones per row and
/// column, every distinct pair of rows meeting in exactly lambda ones, and
/// lambda*(v-1) == k*(k-1). Construct through verify_design / the builders.
class Design {
public:
    std::size_t v() const { return p_.v; }
    std::size_t k() const { return p_.k; }
    std::size_t lambda() const { return p_.lambda; }
    const DesignParams& params() const { return p_; }

    int at(std::size_t i, std::size_t j) const { return inc_[i * p_.v + j]; }

    /// True when the classical size convention v > 2k and k > 2*lambda holds.
    /// Reported, never enforced; complements legitimately break it.
    bool follows_size_convention() const;

    /// 0 <-> 1 swap; parameters (v, v-k, v-2k+lambda).
    Design complement() const;

    /// The incidence matrix as an exact 0/1 matrix.
    ExactMatrix incidence() const;
    /// The +-1 form B = 2A - J. Its gram is
    /// 4(k-lambda)*I + (v - 4(k-lambda))*J with row sums 2k - v.
    ExactMatrix signed_form() const;

    friend bool operator==(const Design& x, const Design& y) {
        return x.p_ == y.p_ && x.inc_ == y.inc_;
    }

    friend Design verify_design(const std::vector<std::vector<int>>& m);

private:
    Design(DesignParams p, std::vector<std::uint8_t> inc)
        : p_(p), inc_(std::move(inc)) {}

    DesignParams p_;
    std::vector<std::uint8_t> inc_; // row-major 0/1
};

/// Full certificate check of a square 0/1 matrix; returns the Design with
/// parameters read off. Throws verify_error naming the violated certificate.
Design verify_design(const std::vector<std::vector<int>>& m);

/// Nonzero quadratic residues mod a prime q = 3 (mod 4): a
/// (q, (q-1)/2, (q-3)/4) difference set. Returned sorted.
std::vector<std::size_t> qr_difference_set(std::size_t q);

/// Circulant with row i the right-rotation of first_row by i, verified as an
/// SBIBD.
Design circulant_incidence(const std::vector<int>& first_row);

/// Circulant design whose first row is the indicator of qr_difference_set(q).
Design qr_design(std::size_t q);

/// (a + n*b) * a^(n-1): the exact value of det(M)^2 for any order-n matrix M
/// with M*M^T = a*I + b*J. Kept squared so the result stays in the field even
/// when sqrt(a + n*b) does not.
QuadNum gram_det_formula(const QuadNum& a, const QuadNum& b, std::size_t n);

} // namespace cforge
