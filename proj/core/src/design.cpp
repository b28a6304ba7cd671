#include "cforge/design.hpp"

#include <string>

#include "cforge/errors.hpp"

namespace cforge {

bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

bool Design::follows_size_convention() const {
    return p_.v > 2 * p_.k && p_.k > 2 * p_.lambda;
}

Design Design::complement() const {
    std::vector<std::vector<int>> m(p_.v, std::vector<int>(p_.v));
    for (std::size_t i = 0; i < p_.v; ++i)
        for (std::size_t j = 0; j < p_.v; ++j) m[i][j] = 1 - at(i, j);
    return verify_design(m);
}

ExactMatrix Design::incidence() const {
    ExactMatrix m(p_.v);
    for (std::size_t i = 0; i < p_.v; ++i)
        for (std::size_t j = 0; j < p_.v; ++j) m(i, j) = at(i, j);
    return m;
}

ExactMatrix Design::signed_form() const {
    ExactMatrix m(p_.v);
    for (std::size_t i = 0; i < p_.v; ++i)
        for (std::size_t j = 0; j < p_.v; ++j) m(i, j) = 2 * at(i, j) - 1;
    return m;
}

Design verify_design(const std::vector<std::vector<int>>& m) {
    const std::size_t v = m.size();
    if (v == 0) {
        throw verify_error("design: empty matrix");
    }
    std::vector<std::uint8_t> inc;
    inc.reserve(v * v);
    for (std::size_t i = 0; i < v; ++i) {
        if (m[i].size() != v) {
            throw verify_error("design: matrix is not square");
        }
        for (int e : m[i]) {
            if (e != 0 && e != 1) {
                throw verify_error("design: entry not in {0,1}");
            }
            inc.push_back(static_cast<std::uint8_t>(e));
        }
    }

    auto row_sum = [&](std::size_t i) {
        std::size_t s = 0;
        for (std::size_t j = 0; j < v; ++j) s += inc[i * v + j];
        return s;
    };
    const std::size_t k = row_sum(0);
    for (std::size_t i = 1; i < v; ++i) {
        if (row_sum(i) != k) {
            throw verify_error("design: row " + std::to_string(i) + " has " +
                               std::to_string(row_sum(i)) + " ones, expected " + std::to_string(k));
        }
    }
    for (std::size_t j = 0; j < v; ++j) {
        std::size_t s = 0;
        for (std::size_t i = 0; i < v; ++i) s += inc[i * v + j];
        if (s != k) {
            throw verify_error("design: column " + std::to_string(j) + " has " +
                               std::to_string(s) + " ones, expected " + std::to_string(k));
        }
    }
    if (k == 0 || k == v) {
        throw verify_error("design: degenerate (k = " + std::to_string(k) + " with v = " +
                           std::to_string(v) + ")");
    }

    std::size_t lambda = 0;
    for (std::size_t j = 0; j < v; ++j) lambda += inc[j] & inc[v + j];
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = i + 1; j < v; ++j) {
            std::size_t dot = 0;
            for (std::size_t c = 0; c < v; ++c) dot += inc[i * v + c] & inc[j * v + c];
            if (dot != lambda) {
                throw verify_error("design: rows " + std::to_string(i) + "," + std::to_string(j) +
                                   " meet in " + std::to_string(dot) + " ones, expected " +
                                   std::to_string(lambda));
            }
        }
    }
    if (lambda * (v - 1) != k * (k - 1)) {
        throw verify_error("design: lambda(v-1) != k(k-1) for (v,k,lambda) = (" +
                           std::to_string(v) + "," + std::to_string(k) + "," +
                           std::to_string(lambda) + ")");
    }
    return Design({v, k, lambda}, std::move(inc));
}

std::vector<std::size_t> qr_difference_set(std::size_t q) {
    if (!is_prime(q)) {
        throw math_error("qr_difference_set: " + std::to_string(q) + " is not prime");
    }
    if (q % 4 != 3) {
        throw math_error("qr_difference_set: " + std::to_string(q) + " != 3 (mod 4)");
    }
    std::vector<std::size_t> set;
    set.reserve((q - 1) / 2);
    std::vector<bool> seen(q, false);
    for (std::size_t i = 1; i <= (q - 1) / 2; ++i) {
        seen[(i * i) % q] = true;
    }
    for (std::size_t r = 1; r < q; ++r) {
        if (seen[r]) set.push_back(r);
    }
    return set;
}

Design circulant_incidence(const std::vector<int>& first_row) {
    const std::size_t v = first_row.size();
    if (v < 3) {
        throw math_error("circulant_incidence: row length must be >= 3");
    }
    std::vector<std::vector<int>> m(v, std::vector<int>(v));
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j) m[i][j] = first_row[(j + v - i % v) % v];
    return verify_design(m);
}

Design qr_design(std::size_t q) {
    std::vector<int> row(q, 0);
    for (std::size_t r : qr_difference_set(q)) row[r] = 1;
    return circulant_incidence(row);
}

QuadNum gram_det_formula(const QuadNum& a, const QuadNum& b, std::size_t n) {
    if (n == 0) {
        throw math_error("gram_det_formula: order must be positive");
    }
    return (a + QuadNum(Rational(BigInt(n))) * b) * a.pow(static_cast<unsigned long>(n - 1));
}

} // namespace cforge
