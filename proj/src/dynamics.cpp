#include "hinf/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hinf {

namespace {

constexpr Complex I(0.0, 1.0);

void check_closed_ball(const ComplexVector& z, double tol) {
    if (z.size() < 1) throw std::invalid_argument("parabolic map: empty vector");
    if (classify_point(z, tol) == PointClass::exterior) {
        throw std::domain_error("parabolic map: point outside the closed ball (|z| = " +
                                std::to_string(z.norm()) + ")");
    }
}

void check_denominator(Complex den) {
    if (std::abs(den) < 1e-300) throw std::domain_error("parabolic map: vanishing denominator");
}

}  // namespace

Complex iterate_first_deviation(Complex z1, std::int64_t j) {
    if (j > kMaxIterate || j < -kMaxIterate) {
        throw std::out_of_range("parabolic_iterate: |j| exceeds 2^53");
    }
    const Complex w = z1 - 1.0;
    const Complex den = 1.0 + static_cast<double>(j) * I * w;
    check_denominator(den);
    return w / den;
}

ComplexVector parabolic_apply(const ComplexVector& z, double tol) {
    check_closed_ball(z, tol);
    const Complex den = (1.0 - I) + I * z(0);
    check_denominator(den);
    ComplexVector out(z.size());
    out(0) = ((1.0 + I) * z(0) - I) / den;
    for (Eigen::Index k = 1; k < z.size(); ++k) out(k) = z(k) / den;
    return out;
}

ComplexVector parabolic_iterate(const ComplexVector& z, std::int64_t j, double tol) {
    if (j > kMaxIterate || j < -kMaxIterate) {
        throw std::out_of_range("parabolic_iterate: |j| exceeds 2^53");
    }
    check_closed_ball(z, tol);
    if (j == 0) return z;
    const Complex w = z(0) - 1.0;
    const Complex den = 1.0 + static_cast<double>(j) * I * w;
    check_denominator(den);
    ComplexVector out(z.size());
    out(0) = 1.0 + w / den;
    for (Eigen::Index k = 1; k < z.size(); ++k) out(k) = z(k) / den;
    return out;
}

ParabolicMap::ParabolicMap(int dimension) : n_(dimension) {
    if (n_ < 1) throw std::invalid_argument("ParabolicMap: dimension must be positive");
}

OrbitRecord orbit(const BallPoint& start, const std::vector<std::int64_t>& exponents) {
    OrbitRecord rec{start, exponents, {}, {}};
    const ComplexVector one = one_point(start.dimension());
    rec.points.reserve(exponents.size());
    rec.distances_to_one.reserve(exponents.size());
    for (std::int64_t j : exponents) {
        BallPoint p(parabolic_iterate(start.vector(), j), 0.0);
        rec.distances_to_one.push_back((p.vector() - one).norm());
        rec.points.push_back(std::move(p));
    }
    return rec;
}

std::vector<std::int64_t> dyadic_exponents(int max_power, bool include_zero) {
    std::vector<std::int64_t> out;
    if (include_zero) out.push_back(0);
    for (int p = 0; p <= max_power; ++p) out.push_back(std::int64_t{1} << p);
    return out;
}

namespace {

double scaled_deviation(Complex z1, std::int64_t j) {
    return std::abs(static_cast<double>(j)) * std::abs(iterate_first_deviation(z1, j));
}

}  // namespace

TailConstant tail_constant(double radius, std::int64_t j_max, std::uint64_t seed) {
    if (!(radius >= 0.0 && radius <= 0.99)) {
        throw std::invalid_argument("tail_constant: radius must lie in [0, 0.99]");
    }
    if (j_max < 1 || j_max > kMaxIterate) {
        throw std::invalid_argument("tail_constant: j_max must lie in [1, 2^53]");
    }
    // The deviation depends on z only through z_1, so the sample is a polar
    // grid of the disc |z_1| <= radius.
    constexpr int kRings = 64;
    constexpr int kAngles = 256;
    double best = 0.0;
    for (int ring = 0; ring <= kRings; ++ring) {
        const double r = radius * ring / kRings;
        const int angles = ring == 0 ? 1 : kAngles;
        for (int a = 0; a < angles; ++a) {
            const Complex z1 = std::polar(r, 2.0 * std::numbers::pi * a / kAngles);
            for (std::int64_t j = 1; j <= j_max; ++j) {
                best = std::max({best, scaled_deviation(z1, j), scaled_deviation(z1, -j)});
            }
        }
    }
    TailConstant t{radius, kTailSafetyFactor * best, j_max, best, false};
    t.validated = validate_tail_constant(t, seed);
    return t;
}

bool validate_tail_constant(const TailConstant& t, std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed ^ 0x7a11c0de5eedULL);
    std::uniform_int_distribution<std::int64_t> pick_j(1, t.j_max);
    std::bernoulli_distribution negate(0.5);
    for (int s = 0; s < samples; ++s) {
        const ComplexVector z = random_ball_vector(rng, 1, t.radius);
        std::int64_t j = pick_j(rng);
        if (negate(rng)) j = -j;
        if (scaled_deviation(z(0), j) > t.K) return false;
    }
    return true;
}

}  // namespace hinf
