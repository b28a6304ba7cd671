#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cforge/design.hpp"
#include "cforge/hadamard.hpp"

namespace cforge {

/// Which cells of the source design receive the level x = 1.
enum class LevelConvention { x_on_ones, x_on_zeros };

std::string to_string(LevelConvention c);
LevelConvention convention_from_string(const std::string& s);

/// Cell mask of a 2-level matrix: x goes on the 1-cells, y on the 0-cells.
/// The mask must verify as a design; degenerate lambda = 0 masks (e.g. the
/// identity) are fine.
class TwoLevelPattern {
public:
    explicit TwoLevelPattern(Design mask) : mask_(std::move(mask)) {}

    std::size_t v() const { return mask_.v(); }
    std::size_t ones_per_row() const { return mask_.k(); }
    std::size_t pairwise_ones() const { return mask_.lambda(); }
    const Design& mask() const { return mask_; }

private:
    Design mask_;
};

/// Coefficients of the distinct-row inner product
///   yy*y^2 + xy*x*y + xx*x^2,
/// which every pair of distinct rows of a 2-level pattern matrix attains.
struct CharacteristicCoeffs {
    BigInt yy;
    BigInt xy;
    BigInt xx;

    friend bool operator==(const CharacteristicCoeffs&, const CharacteristicCoeffs&) = default;
};

/// Closed form (v-2k+lambda, 2(k-lambda), lambda) for an SBIBD mask.
CharacteristicCoeffs characteristic_coeffs(const TwoLevelPattern& p);

struct LevelSolution {
    CharacteristicCoeffs coeffs;
    BigInt discriminant; // xy^2 - 4*yy*xx
    QuadNum y;           // chosen root at x = 1
    bool feasible;       // |y| <= 1, certified exactly
};

/// Solves yy*y^2 + xy*y + xx = 0 exactly at x = 1 over Q(sqrt(m)), m the
/// squarefree part of the discriminant. The linear case yy = 0 is handled.
/// Root choice: among roots with |y| <= 1, nonzero roots are preferred, then
/// the smaller |y|, ties broken toward the +sqrt(m) branch. Throws
/// infeasible_error when no real root has modulus <= 1.
LevelSolution solve_characteristic(const CharacteristicCoeffs& c);

/// solve_characteristic on the pattern's closed-form coefficients.
LevelSolution solve_levels(const TwoLevelPattern& p);

/// Closed-form Mersenne level: (-t + sqrt(t)) / (t-1) for t >= 2, stored over
/// the squarefree part of t (rational when t is a perfect square); -1/2 for
/// the degenerate t = 1, where the characteristic equation turns linear.
QuadNum mersenne_level(unsigned long t);

/// Verified 2-level matrix: entries x = 1 on the pattern's 1-cells and y
/// elsewhere, with matrix * matrix^T = omega * I certified exactly and
/// omega = k*x^2 + (v-k)*y^2.
class CretanMatrix {
public:
    std::size_t order() const { return pattern_.v(); }
    const TwoLevelPattern& pattern() const { return pattern_; }
    QuadNum x() const { return QuadNum(1); }
    const QuadNum& y() const { return y_; }
    const QuadNum& omega() const { return omega_; }
    const ExactMatrix& matrix() const { return m_; }

    /// Parameters of the design the matrix was derived from, and which of its
    /// cell classes carries x. For directly built matrices this is the
    /// pattern itself under x_on_ones.
    const DesignParams& source_params() const { return source_; }
    LevelConvention convention() const { return convention_; }

    friend CretanMatrix make_cretan(TwoLevelPattern pattern, QuadNum y, DesignParams source,
                                    LevelConvention convention);

private:
    CretanMatrix(TwoLevelPattern pattern, QuadNum y, QuadNum omega, ExactMatrix m,
                 DesignParams source, LevelConvention convention)
        : pattern_(std::move(pattern)), y_(std::move(y)), omega_(std::move(omega)),
          m_(std::move(m)), source_(source), convention_(convention) {}

    TwoLevelPattern pattern_;
    QuadNum y_;
    QuadNum omega_;
    ExactMatrix m_;
    DesignParams source_;
    LevelConvention convention_;
};

/// Builds and certifies the 2-level matrix for an explicit level y:
/// |y| <= 1 exactly, gram = omega*I exactly, characteristic substitution
/// exactly zero. Throws verify_error naming the first violated certificate.
CretanMatrix make_cretan(TwoLevelPattern pattern, QuadNum y, DesignParams source,
                         LevelConvention convention);
CretanMatrix make_cretan(TwoLevelPattern pattern, QuadNum y);

/// SBIBD -> 2-level matrix: lays x on the chosen cell class, solves the
/// characteristic equation, certifies the result.
CretanMatrix cretan_from_sbibd(const Design& d, LevelConvention convention);

struct WeightReport {
    QuadNum omega;
    QuadNum det_sq;   // omega^v, exact
    double det_float; // float(omega)^(v/2)
};

WeightReport weight_and_det(const CretanMatrix& s);

/// Maximal-determinant bounds at order n for matrices with entries of
/// modulus <= 1. Barba applies to odd n only, Wojtas to n = 2 (mod 4).
struct DetBounds {
    double hadamard = 0;
    std::optional<double> barba;
    std::optional<double> wojtas;
};

DetBounds det_bounds(std::size_t n);

/// 0/1 matrix with ones exactly where the Cretan matrix has entry 1,
/// verified as a design. Requires y != 1.
Design cretan_to_incidence(const CretanMatrix& s);

struct RoundTripStage {
    std::string name;
    std::string detail;
};

/// Full equivalence pipeline report; see roundtrip().
struct RoundTripReport {
    std::size_t t = 0;
    std::size_t hadamard_order = 0;
    std::size_t cretan_order = 0;
    QuadNum y;
    QuadNum omega;
    QuadNum det_sq;
    double omega_float = 0;
    double det_float = 0;
    QuadNum omega_alt;        // x_on_ones solution from the same core design
    double det_alt_float = 0;
    double barba = 0;         // bound at the (odd) Cretan order
    double det_to_barba = 0;
    bool final_equals_initial = false;
    std::vector<RoundTripStage> stages;
};

/// Hadamard -> normalize -> core design -> 2-level Mersenne matrix (x on the
/// core's zeros, level certified equal to mersenne_level(t)) -> incidence ->
/// complement -> bordered Hadamard, certified equal to the normalized input
/// entrywise. Any stage failure throws with the failing certificate.
RoundTripReport roundtrip(const HadamardMatrix& h);

} // namespace cforge
