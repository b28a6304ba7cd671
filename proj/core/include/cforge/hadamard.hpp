#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cforge/design.hpp"

namespace cforge {

/// Verified +-1 matrix H with H*H^T = n*I and n in {1, 2} or n = 0 (mod 4).
class HadamardMatrix {
public:
    std::size_t order() const { return n_; }
    int at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    bool is_normalized() const { return normalized_; }

    ExactMatrix exact() const;
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const HadamardMatrix& x, const HadamardMatrix& y) {
        return x.n_ == y.n_ && x.e_ == y.e_;
    }

    friend HadamardMatrix hadamard_from_entries(const std::vector<std::vector<int>>& m);
    friend HadamardMatrix normalize(const HadamardMatrix& h);

private:
    HadamardMatrix(std::size_t n, std::vector<std::int8_t> e);

    std::size_t n_;
    std::vector<std::int8_t> e_;
    bool normalized_;
};

/// Checks entries are +-1, the gram is n*I, and the order is admissible.
/// Returns the order; throws verify_error naming the violated certificate.
std::size_t verify_hadamard(const std::vector<std::vector<int>>& m);

/// verify_hadamard + wrap.
HadamardMatrix hadamard_from_entries(const std::vector<std::vector<int>>& m);

/// Order 2^k by the doubling construction [[H, H], [H, -H]]; normalized.
HadamardMatrix sylvester(unsigned k);

/// Order q+1 for prime q = 3 (mod 4), built by bordering the +-1 form of the
/// quadratic-residue design: sbibd_to_hadamard(qr_design(q)).
HadamardMatrix paley_hadamard(std::size_t q);

/// Negates every column whose first-row entry is -1, then every row whose
/// first-column entry is -1. Idempotent; |det| unchanged.
HadamardMatrix normalize(const HadamardMatrix& h);

/// Normalize, strip the all-ones border, map -1 -> 0: the core of an order-4t
/// matrix is an SBIBD(4t-1, 2t-1, t-1). Also certifies B*B^T = 4t*I - J for
/// the +-1 core B.
Design core_to_sbibd(const HadamardMatrix& h);

/// Border the +-1 form 2A - J of an SBIBD(4t-1, 2t-1, t-1) with a row and
/// column of ones; the result is a normalized Hadamard matrix of order 4t.
HadamardMatrix sbibd_to_hadamard(const Design& a);

} // namespace cforge
