#include "cforge/hadamard.hpp"

#include <cstdint>
#include <string>

#include "cforge/errors.hpp"

namespace cforge {

HadamardMatrix::HadamardMatrix(std::size_t n, std::vector<std::int8_t> e)
    : n_(n), e_(std::move(e)) {
    normalized_ = true;
    for (std::size_t i = 0; i < n_ && normalized_; ++i) {
        if (e_[i] != 1 || e_[i * n_] != 1) normalized_ = false;
    }
}

ExactMatrix HadamardMatrix::exact() const {
    ExactMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = at(i, j);
    return m;
}

std::vector<std::vector<int>> HadamardMatrix::rows() const {
    std::vector<std::vector<int>> r(n_, std::vector<int>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r[i][j] = at(i, j);
    return r;
}

std::size_t verify_hadamard(const std::vector<std::vector<int>>& m) {
    const std::size_t n = m.size();
    if (n == 0) {
        throw verify_error("hadamard: empty matrix");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) {
            throw verify_error("hadamard: matrix is not square");
        }
        for (int e : m[i]) {
            if (e != 1 && e != -1) {
                throw verify_error("hadamard: entry not in {-1,+1}");
            }
        }
    }
    if (n != 1 && n != 2 && n % 4 != 0) {
        throw verify_error("hadamard: order " + std::to_string(n) + " is not 1, 2 or 4t");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            long long dot = 0;
            for (std::size_t c = 0; c < n; ++c)
                dot += static_cast<long long>(m[i][c]) * m[j][c];
            const long long expected = i == j ? static_cast<long long>(n) : 0;
            if (dot != expected) {
                throw verify_error("hadamard: rows " + std::to_string(i) + "," +
                                   std::to_string(j) + " have inner product " +
                                   std::to_string(dot) + ", expected " + std::to_string(expected));
            }
        }
    }
    return n;
}

HadamardMatrix hadamard_from_entries(const std::vector<std::vector<int>>& m) {
    const std::size_t n = verify_hadamard(m);
    std::vector<std::int8_t> e;
    e.reserve(n * n);
    for (const auto& row : m)
        for (int x : row) e.push_back(static_cast<std::int8_t>(x));
    return HadamardMatrix(n, std::move(e));
}

HadamardMatrix sylvester(unsigned k) {
    std::size_t n = 1;
    std::vector<std::vector<int>> m{{1}};
    for (unsigned step = 0; step < k; ++step) {
        std::vector<std::vector<int>> next(2 * n, std::vector<int>(2 * n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                next[i][j] = m[i][j];
                next[i][j + n] = m[i][j];
                next[i + n][j] = m[i][j];
                next[i + n][j + n] = -m[i][j];
            }
        }
        m = std::move(next);
        n *= 2;
    }
    return hadamard_from_entries(m);
}

HadamardMatrix paley_hadamard(std::size_t q) {
    return sbibd_to_hadamard(qr_design(q));
}

HadamardMatrix normalize(const HadamardMatrix& h) {
    const std::size_t n = h.order();
    auto m = h.rows();
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == -1) {
            for (std::size_t i = 0; i < n; ++i) m[i][j] = -m[i][j];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0] == -1) {
            for (std::size_t j = 0; j < n; ++j) m[i][j] = -m[i][j];
        }
    }
    return hadamard_from_entries(m);
}

Design core_to_sbibd(const HadamardMatrix& h) {
    const std::size_t n = h.order();
    if (n % 4 != 0) {
        throw verify_error("core extraction needs order 4t, got " + std::to_string(n));
    }
    const std::size_t t = n / 4;
    const HadamardMatrix g = normalize(h);
    const std::size_t v = n - 1;

    std::vector<std::vector<int>> core(v, std::vector<int>(v));
    std::vector<std::vector<int>> a(v, std::vector<int>(v));
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            core[i][j] = g.at(i + 1, j + 1);
            a[i][j] = (core[i][j] + 1) / 2;
        }
    }

    // Core certificate: B*B^T = 4t*I - J.
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = i; j < v; ++j) {
            long long dot = 0;
            for (std::size_t c = 0; c < v; ++c)
                dot += static_cast<long long>(core[i][c]) * core[j][c];
            const long long expected = i == j ? static_cast<long long>(4 * t - 1) : -1;
            if (dot != expected) {
                throw verify_error("core: B*B^T != 4t*I - J at rows " + std::to_string(i) + "," +
                                   std::to_string(j));
            }
        }
    }

    Design d = verify_design(a);
    if (d.params() != DesignParams{4 * t - 1, 2 * t - 1, t - 1}) {
        throw verify_error("core: parameters are not (4t-1, 2t-1, t-1)");
    }
    return d;
}

HadamardMatrix sbibd_to_hadamard(const Design& a) {
    const std::size_t v = a.v();
    if (v % 4 != 3) {
        throw verify_error("bordering needs order v = 4t-1, got " + std::to_string(v));
    }
    const std::size_t t = (v + 1) / 4;
    if (a.params() != DesignParams{4 * t - 1, 2 * t - 1, t - 1}) {
        throw verify_error("bordering needs parameters (4t-1, 2t-1, t-1), got (" +
                           std::to_string(a.v()) + "," + std::to_string(a.k()) + "," +
                           std::to_string(a.lambda()) + ")");
    }
    const std::size_t n = v + 1;
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 1));
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j) m[i + 1][j + 1] = 2 * a.at(i, j) - 1;
    return hadamard_from_entries(m);
}

} // namespace cforge
