#pragma once

#include <random>
#include <vector>

#include "cforge/exact_matrix.hpp"

// Shared test utilities. The determinant oracle here is deliberately a
// different algorithm (plain divide-through Gaussian elimination) from the
// library's fraction-free Bareiss path.
namespace testutil {

inline std::mt19937& rng() {
    static std::mt19937 g(0xC0FFEE);
    return g;
}

inline cforge::Rational random_rational(int span = 12, int den_max = 6) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, den_max);
    return cforge::Rational(cforge::BigInt(num(rng())), cforge::BigInt(den(rng())));
}

inline cforge::QuadNum random_quadnum(long d = 2) {
    return cforge::QuadNum(random_rational(), random_rational(), cforge::BigInt(d));
}

inline cforge::ExactMatrix random_matrix(std::size_t n, long d = 2) {
    cforge::ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_quadnum(d);
    return m;
}

inline cforge::QuadNum oracle_det(cforge::ExactMatrix m) {
    using cforge::QuadNum;
    const std::size_t n = m.order();
    QuadNum det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c).is_zero()) ++pivot;
        if (pivot == n) return QuadNum(0);
        if (pivot != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m(c, j), m(pivot, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            QuadNum factor = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= factor * m(c, j);
        }
    }
    return det;
}

} // namespace testutil
