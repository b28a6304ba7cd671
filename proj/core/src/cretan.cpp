#include "cforge/cretan.hpp"

#include <cmath>
#include <utility>

#include "cforge/errors.hpp"

namespace cforge {

std::string to_string(LevelConvention c) {
    return c == LevelConvention::x_on_ones ? "x-on-ones" : "x-on-zeros";
}

LevelConvention convention_from_string(const std::string& s) {
    if (s == "x-on-ones" || s == "x_on_ones") return LevelConvention::x_on_ones;
    if (s == "x-on-zeros" || s == "x_on_zeros") return LevelConvention::x_on_zeros;
    throw format_error("unknown level convention '" + s + "'");
}

CharacteristicCoeffs characteristic_coeffs(const TwoLevelPattern& p) {
    const BigInt v = p.v();
    const BigInt k = p.ones_per_row();
    const BigInt lambda = p.pairwise_ones();
    return {v - 2 * k + lambda, 2 * (k - lambda), lambda};
}

namespace {

bool feasible_level(const QuadNum& y) { return compare(y.abs(), QuadNum(1)) <= 0; }

// Among feasible roots prefer nonzero, then smaller |y|; ties keep the
// earlier candidate, so list the +sqrt(m) branch first.
QuadNum select_root(const std::vector<QuadNum>& candidates) {
    const QuadNum* best = nullptr;
    for (const QuadNum& r : candidates) {
        if (!feasible_level(r)) continue;
        if (best == nullptr) {
            best = &r;
            continue;
        }
        if (best->is_zero() && !r.is_zero()) {
            best = &r;
            continue;
        }
        if (!best->is_zero() && !r.is_zero() && compare(r.abs(), best->abs()) < 0) {
            best = &r;
        }
    }
    if (best == nullptr) {
        throw infeasible_error("no characteristic root has modulus <= 1");
    }
    return *best;
}

} // namespace

LevelSolution solve_characteristic(const CharacteristicCoeffs& c) {
    const BigInt disc = c.xy * c.xy - 4 * c.yy * c.xx;

    if (c.yy.is_zero()) {
        if (c.xy.is_zero()) {
            throw infeasible_error("characteristic equation is degenerate");
        }
        QuadNum y{Rational(-c.xx, c.xy)};
        if (!feasible_level(y)) {
            throw infeasible_error("linear characteristic root has modulus > 1");
        }
        return {c, disc, std::move(y), true};
    }

    if (disc.sign() < 0) {
        throw infeasible_error("negative discriminant: no real level");
    }

    std::vector<QuadNum> roots;
    const Rational half_den(2 * c.yy);
    if (disc.is_zero()) {
        roots.emplace_back(Rational(-c.xy) / half_den);
    } else {
        auto [s, m] = squarefree_decompose(disc);
        roots.emplace_back(Rational(-c.xy) / half_den, Rational(s) / half_den, m);
        roots.emplace_back(Rational(-c.xy) / half_den, Rational(-s) / half_den, m);
    }
    QuadNum y = select_root(roots);
    return {c, disc, std::move(y), true};
}

LevelSolution solve_levels(const TwoLevelPattern& p) {
    return solve_characteristic(characteristic_coeffs(p));
}

QuadNum mersenne_level(unsigned long t) {
    if (t == 0) {
        throw math_error("mersenne_level needs t >= 1");
    }
    if (t == 1) {
        return QuadNum(Rational(-1, 2));
    }
    const BigInt tt(t);
    return QuadNum(Rational(-tt, tt - 1), Rational(1, tt - 1), tt);
}

CretanMatrix make_cretan(TwoLevelPattern pattern, QuadNum y, DesignParams source,
                         LevelConvention convention) {
    if (!feasible_level(y)) {
        throw verify_error("level |y| > 1: y = " + y.str());
    }
    const std::size_t v = pattern.v();
    const std::size_t k = pattern.ones_per_row();
    const Design& mask = pattern.mask();

    ExactMatrix m(v);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j) m(i, j) = mask.at(i, j) ? QuadNum(1) : y;

    // Radius value k*x^2 + (v-k)*y^2 at x = 1.
    const QuadNum omega = QuadNum(Rational(BigInt(k))) +
                          QuadNum(Rational(BigInt(v - k))) * y * y;

    const ExactMatrix g = gram(m);
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            if (i == j) {
                if (g(i, i) != omega) {
                    throw verify_error("radius equation violated at row " + std::to_string(i));
                }
            } else if (!g(i, j).is_zero()) {
                throw verify_error("characteristic equation violated at rows (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }

    // Direct substitution check, independent of the gram loop.
    const CharacteristicCoeffs c = characteristic_coeffs(pattern);
    const QuadNum residue = QuadNum(Rational(c.yy)) * y * y + QuadNum(Rational(c.xy)) * y +
                            QuadNum(Rational(c.xx));
    if (!residue.is_zero()) {
        throw verify_error("level does not satisfy the characteristic equation: residue " +
                           residue.str());
    }

    return CretanMatrix(std::move(pattern), std::move(y), omega, std::move(m), source, convention);
}

CretanMatrix make_cretan(TwoLevelPattern pattern, QuadNum y) {
    DesignParams source = pattern.mask().params();
    return make_cretan(std::move(pattern), std::move(y), source, LevelConvention::x_on_ones);
}

CretanMatrix cretan_from_sbibd(const Design& d, LevelConvention convention) {
    Design mask = convention == LevelConvention::x_on_ones ? d : d.complement();
    TwoLevelPattern pattern(std::move(mask));
    LevelSolution sol = solve_levels(pattern);
    return make_cretan(std::move(pattern), std::move(sol.y), d.params(), convention);
}

WeightReport weight_and_det(const CretanMatrix& s) {
    const std::size_t v = s.order();
    QuadNum det_sq = s.omega().pow(static_cast<unsigned long>(v));
    double det_float = std::pow(s.omega().to_double(), static_cast<double>(v) / 2.0);
    return {s.omega(), std::move(det_sq), det_float};
}

DetBounds det_bounds(std::size_t n) {
    if (n == 0) {
        throw math_error("det_bounds needs order >= 1");
    }
    DetBounds b;
    const double nd = static_cast<double>(n);
    b.hadamard = std::pow(nd, nd / 2.0);
    if (n % 2 == 1) {
        b.barba = std::sqrt(2.0 * nd - 1.0) * std::pow(nd - 1.0, (nd - 1.0) / 2.0);
    }
    if (n % 4 == 2) {
        b.wojtas = 2.0 * (nd - 1.0) * std::pow(nd - 2.0, (nd - 2.0) / 2.0);
    }
    return b;
}

Design cretan_to_incidence(const CretanMatrix& s) {
    if (s.y() == QuadNum(1)) {
        throw verify_error("levels coincide (y = 1): incidence is not recoverable");
    }
    const std::size_t v = s.order();
    const QuadNum one(1);
    std::vector<std::vector<int>> m(v, std::vector<int>(v));
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j) m[i][j] = s.matrix()(i, j) == one ? 1 : 0;
    return verify_design(m);
}

RoundTripReport roundtrip(const HadamardMatrix& h) {
    RoundTripReport r;
    r.hadamard_order = h.order();
    if (h.order() % 4 != 0) {
        throw verify_error("round trip needs order 4t, got " + std::to_string(h.order()));
    }
    r.t = h.order() / 4;
    r.cretan_order = h.order() - 1;

    const HadamardMatrix g = normalize(h);
    r.stages.push_back({"normalize", "order " + std::to_string(g.order())});

    const Design core = core_to_sbibd(g);
    r.stages.push_back({"core_to_sbibd", "(" + std::to_string(core.v()) + "," +
                                             std::to_string(core.k()) + "," +
                                             std::to_string(core.lambda()) + ")"});

    const CretanMatrix c = cretan_from_sbibd(core, LevelConvention::x_on_zeros);
    const QuadNum expected_y = mersenne_level(r.t);
    if (c.y() != expected_y) {
        throw verify_error("level differs from the closed form: " + c.y().str() + " vs " +
                           expected_y.str());
    }
    r.y = c.y();
    r.omega = c.omega();
    const WeightReport w = weight_and_det(c);
    r.det_sq = w.det_sq;
    r.omega_float = c.omega().to_double();
    r.det_float = w.det_float;
    r.stages.push_back({"cretan_from_sbibd", "y = " + c.y().str() + ", omega = " + c.omega().str()});

    const Design ones_of_cretan = cretan_to_incidence(c);
    r.stages.push_back({"cretan_to_incidence", "(" + std::to_string(ones_of_cretan.v()) + "," +
                                                   std::to_string(ones_of_cretan.k()) + "," +
                                                   std::to_string(ones_of_cretan.lambda()) + ")"});

    // The 1-cells of the x_on_zeros matrix are the complement class; flip
    // back to the (4t-1, 2t-1, t-1) orientation the bordering step needs.
    const Design back = ones_of_cretan.complement();
    r.stages.push_back({"complement", "(" + std::to_string(back.v()) + "," +
                                          std::to_string(back.k()) + "," +
                                          std::to_string(back.lambda()) + ")"});

    const HadamardMatrix rebuilt = sbibd_to_hadamard(back);
    r.stages.push_back({"sbibd_to_hadamard", "order " + std::to_string(rebuilt.order())});

    r.final_equals_initial = rebuilt == g;
    if (!r.final_equals_initial) {
        throw verify_error("round trip did not reproduce the normalized matrix entrywise");
    }
    r.stages.push_back({"fixed_point", "final equals normalized input entrywise"});

    // The x_on_ones solution from the same core, for the determinant
    // comparison between the two orientations.
    const CretanMatrix alt = cretan_from_sbibd(core, LevelConvention::x_on_ones);
    r.omega_alt = alt.omega();
    r.det_alt_float = weight_and_det(alt).det_float;

    const DetBounds bounds = det_bounds(r.cretan_order);
    r.barba = bounds.barba.value();
    r.det_to_barba = r.det_float / r.barba;
    return r;
}

} // namespace cforge
