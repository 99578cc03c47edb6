#pragma once

// The parabolic automorphism L of the ball fixing 1 = (1, 0, ..., 0):
//
//   L(z) = ( ((1+i) z_1 - i) / ((1-i) + i z_1),  z_k / ((1-i) + i z_1) ),
//
// with closed-form integer iterates
//
//   L^j(z) = ( (z_1 + j i (z_1 - 1)) / (1 + j i (z_1 - 1)),  z_k / (1 + j i (z_1 - 1)) ).
//
// |L(z)|^2 - 1 = (|z|^2 - 1) / |den|^2, so L preserves B, S and the exterior.

#include <cstdint>
#include <vector>

#include "hinf/ball.hpp"

namespace hinf {

/// Largest |j| accepted by the closed form: j must be exact as a double.
inline constexpr std::int64_t kMaxIterate = std::int64_t{1} << 53;

ComplexVector parabolic_apply(const ComplexVector& z, double tol = kBoundaryTol);

/// j-th iterate (j may be negative). j == 0 returns z unchanged.
ComplexVector parabolic_iterate(const ComplexVector& z, std::int64_t j,
                                double tol = kBoundaryTol);

/// <L^j(z), e_1> - 1 = (z_1 - 1) / (1 + j i (z_1 - 1)), computed without
/// cancellation. This is the quantity controlled by the tail constant.
Complex iterate_first_deviation(Complex z1, std::int64_t j);

class ParabolicMap {
public:
    explicit ParabolicMap(int dimension);

    int dimension() const { return n_; }
    ComplexVector operator()(const ComplexVector& z) const { return parabolic_apply(z); }
    ComplexVector iterate(const ComplexVector& z, std::int64_t j) const {
        return parabolic_iterate(z, j);
    }
    ComplexVector fixed_point() const { return one_point(n_); }

private:
    int n_;
};

struct OrbitRecord {
    BallPoint start;
    std::vector<std::int64_t> exponents;
    std::vector<BallPoint> points;
    std::vector<double> distances_to_one;
};

/// Orbit points are stored as BallPoints with tolerance 0: iterates approach
/// 1 tangentially, so 1 - |L^j(z)| shrinks like 1/j^2 and would trip the
/// default boundary tolerance for long orbits.
OrbitRecord orbit(const BallPoint& start, const std::vector<std::int64_t>& exponents);

/// Exponents {0, 1, 2, 4, ..., 2^max_power}.
std::vector<std::int64_t> dyadic_exponents(int max_power, bool include_zero = true);

struct TailConstant {
    double radius = 0.0;
    double K = 0.0;
    std::int64_t j_max = 0;
    double sample_max = 0.0;  ///< max of |j| |<L^j(z), e_1> - 1| before the safety factor
    bool validated = false;   ///< independent re-sample respected K
};

inline constexpr double kTailSafetyFactor = 1.25;

/// Empirical K with |<L^j(z), e_1> - 1| <= K / |j| for |z| <= radius,
/// 0 < |j| <= j_max. Requires radius in [0, 0.99].
TailConstant tail_constant(double radius, std::int64_t j_max, std::uint64_t seed = 42);

/// Re-checks the bound on `samples` seeded random (z, j) draws.
bool validate_tail_constant(const TailConstant& t, std::uint64_t seed, int samples = 4096);

}  // namespace hinf
